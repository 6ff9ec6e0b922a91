#include <exception>
#include <iostream>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    mcg::cli::DispatchResult res = mcg::cli::dispatch(args);
    if (!res.output.empty()) std::cout << res.output;
    if (!res.error.empty()) std::cerr << res.error;
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
