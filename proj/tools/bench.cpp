// Throughput comparison between the serial reference batch and the OpenMP
// batch over randomly sampled descriptors. The two runs must agree item by
// item; the benchmark aborts if they ever disagree.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "susp7/batch.hpp"
#include "susp7/sampler.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t count = 20000;
  std::uint32_t seed = 7;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--count" && i + 1 < argc)
      count = static_cast<std::size_t>(std::stoull(argv[++i]));
    else if (arg == "--seed" && i + 1 < argc)
      seed = static_cast<std::uint32_t>(std::stoul(argv[++i]));
    else {
      std::cerr << "usage: susp7_bench [--count N] [--seed S]\n";
      return 1;
    }
  }

  std::mt19937 rng(seed);
  std::vector<susp7::ManifoldDescriptor> input;
  input.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    input.push_back(susp7::random_descriptor(rng));

  const auto t0 = std::chrono::steady_clock::now();
  const auto serial = susp7::run_batch(input, /*parallel=*/false);
  const double serial_s = seconds_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  const auto parallel = susp7::run_batch(input, /*parallel=*/true);
  const double parallel_s = seconds_since(t1);

  if (serial != parallel) {
    std::cerr << "parallel batch disagrees with the serial reference\n";
    return 1;
  }

  std::cout << "items:            " << count << "\n";
  std::cout << "threads:          " << susp7::max_threads() << "\n";
  std::cout << "serial seconds:   " << serial_s << "\n";
  std::cout << "parallel seconds: " << parallel_s << "\n";
  if (parallel_s > 0.0)
    std::cout << "speedup:          " << serial_s / parallel_s << "x\n";
  return 0;
}
