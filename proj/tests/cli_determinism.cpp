// Runs the CLI twice with identical argv+seed and requires byte-identical
// output, plus a spot check that JSON numbers carry full precision.
#include <cstdio>
#include <iostream>
#include <string>

namespace {

std::string run(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_determinism <path-to-divbound>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const std::string cmds[] = {
      bin + " t1 kl --delta 0.25 --json",
      bin + " condition hellinger --grid 128",
      bin + " --seed 7 sweep --points 16",
      bin + " t2 js --mp 1 --sp 0.5 --mq 0 --sq 0.5",
  };
  for (const auto& cmd : cmds) {
    std::string a = run(cmd);
    std::string b = run(cmd);
    if (a.empty() || a != b) {
      std::cerr << "non-deterministic or empty output for: " << cmd << "\n";
      return 1;
    }
  }

  // every JSON double is rendered %.15e: 16 significant digits
  std::string out = run(bin + " t1 hellinger --delta 0.36 --json");
  if (out.find("\"bound\":2.000000000000000e-01") == std::string::npos) {
    std::cerr << "bound not printed at full precision: " << out << "\n";
    return 1;
  }
  std::cout << "deterministic across reruns\n";
  return 0;
}
