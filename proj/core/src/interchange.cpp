#include <mcg/interchange.hpp>

#include <stdexcept>

#include <json.hpp>

namespace mcg {

namespace {

using nlohmann::ordered_json;

template <class T>
std::string entry_str(const T& v);

template <>
std::string entry_str(const Int& v) {
  return int_str(v);
}
template <>
std::string entry_str(const Rat& v) {
  return rat_str(v);
}
template <>
std::string entry_str(const GF2& v) {
  return gf2_str(v);
}
template <>
std::string entry_str(const Poly& v) {
  return v.str();
}

template <class T>
T entry_parse(const std::string& s);

template <>
Int entry_parse(const std::string& s) {
  return parse_int(s);
}
template <>
Rat entry_parse(const std::string& s) {
  return parse_rat(s);
}
template <>
GF2 entry_parse(const std::string& s) {
  return parse_gf2(s);
}
template <>
Poly entry_parse(const std::string& s) {
  return Poly::parse(s);
}

template <class T>
ordered_json matrix_json(const Matrix<T>& m) {
  ordered_json doc;
  doc["ring"] = ring_name(scalar_traits<T>::ring);
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(entry_str(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

std::string cell_text(const nlohmann::json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  // Tolerate plain JSON integers from hand-written documents.
  if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
  throw std::invalid_argument("interchange: entry must be a string");
}

template <class T>
Matrix<T> matrix_from_json(const nlohmann::json& doc, int rows, int cols) {
  std::vector<std::vector<T>> data(static_cast<size_t>(rows));
  const auto& entries = doc.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw std::invalid_argument("interchange: entries/rows mismatch");
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("interchange: entries/cols mismatch");
    data[static_cast<size_t>(i)].reserve(static_cast<size_t>(cols));
    for (int j = 0; j < cols; ++j)
      data[static_cast<size_t>(i)].push_back(
          entry_parse<T>(cell_text(row.at(static_cast<size_t>(j)))));
  }
  return Matrix<T>::from_rows(data);
}

}  // namespace

Ring ring_of(const ExactMatrix& m) {
  return std::visit(
      [](const auto& mm) {
        using T = typename std::decay_t<decltype(mm)>::value_type;
        return scalar_traits<T>::ring;
      },
      m);
}

int rows_of(const ExactMatrix& m) {
  return std::visit([](const auto& mm) { return mm.rows(); }, m);
}

int cols_of(const ExactMatrix& m) {
  return std::visit([](const auto& mm) { return mm.cols(); }, m);
}

std::string plain_str(const ExactMatrix& m) {
  return std::visit([](const auto& mm) { return mm.str(); }, m);
}

std::string to_interchange(const ExactMatrix& m) {
  return std::visit([](const auto& mm) { return matrix_json(mm).dump(); }, m);
}

ExactMatrix from_interchange(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("interchange: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("interchange: not an object");
  const Ring ring = ring_from_name(doc.at("ring").get<std::string>());
  const int rows = doc.at("rows").get<int>();
  const int cols = doc.at("cols").get<int>();
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("interchange: non-positive shape");
  switch (ring) {
    case Ring::Z:
      return matrix_from_json<Int>(doc, rows, cols);
    case Ring::Q:
      return matrix_from_json<Rat>(doc, rows, cols);
    case Ring::GF2:
      return matrix_from_json<GF2>(doc, rows, cols);
    case Ring::PolyQ:
      return matrix_from_json<Poly>(doc, rows, cols);
  }
  throw std::logic_error("interchange: unreachable");
}

}  // namespace mcg
