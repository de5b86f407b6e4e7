// Compares the serial reference sweep against the OpenMP kernel.
#include <chrono>
#include <iostream>

#include "cyco/engine.hpp"

using namespace cyco;

int main(int argc, char** argv) {
  int corollas = argc > 1 ? std::atoi(argv[1]) : 3;
  int depth = argc > 2 ? std::atoi(argv[2]) : 5;
  Signature sig;
  std::vector<std::string> params;
  for (int i = 0; i < corollas && i < 3; ++i) {
    std::string name(1, static_cast<char>('a' + i));
    FinSet fv;
    for (int j = 1; j <= 3; ++j) fv.insert(name + std::to_string(j));
    sig.declare(name, fv);
    params.push_back(name);
  }
  SweepOptions opt;
  opt.corollas = corollas;
  opt.depth = depth;

  auto time = [&](bool par) {
    opt.parallel = par;
    auto t0 = std::chrono::steady_clock::now();
    SweepResult r = sweep_signs(sig, params, opt);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return std::make_pair(ms, r);
  };

  auto [serial_ms, serial] = time(false);
  auto [par_ms, parallel] = time(true);
  std::cout << "objects=" << serial.objects << " pairs=" << serial.pairs
            << " violations=" << serial.violations << "\n";
  std::cout << "serial   " << serial_ms << " ms\n";
  std::cout << "parallel " << par_ms << " ms  (speedup " << serial_ms / par_ms << "x)\n";
  if (serial.report != parallel.report) {
    std::cout << "MISMATCH between serial and parallel reports\n";
    return 1;
  }
  std::cout << "reports identical\n";
  return 0;
}
