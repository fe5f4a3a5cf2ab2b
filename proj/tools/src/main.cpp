#include <fstream>
#include <iostream>

#include "kindex_cli/app.hpp"

int main(int argc, char** argv) {
  using namespace kindex::cli;
  const std::vector<std::string> args(argv + 1, argv + argc);
  const Outcome o = run(args);
  const std::string text = render(o);
  if (o.output && !o.help) {
    std::ofstream out(*o.output);
    if (!out) {
      std::cerr << "cannot write " << *o.output << "\n";
      return kExitDomain;
    }
    out << text;
  } else if (o.exit_code != kExitOk && o.format != "json") {
    std::cerr << text;
  } else {
    std::cout << text;
  }
  return o.exit_code;
}
