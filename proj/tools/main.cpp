#include <iostream>
#include <vector>

#include "isect/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    isect::JobSpec job = isect::parse_args(args);
    isect::RunResult res = isect::run(job);
    std::cout << res.output;
    return res.exit_code;
  } catch (const isect::HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const isect::Error& e) {
    std::cerr << "error [" << e.name() << "]: " << e.what() << "\n";
    return e.name() == "UsageError" ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
