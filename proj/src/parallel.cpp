#include "heckeqf/parallel.hpp"

#include <atomic>
#include <thread>

namespace heckeqf {

unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

void parallel_blocks(uint64_t blocks, unsigned workers, const std::function<void(uint64_t)>& body) {
  if (blocks == 0) return;
  if (workers <= 1 || blocks == 1) {
    for (uint64_t b = 0; b < blocks; ++b) body(b);
    return;
  }
  std::atomic<uint64_t> next{0};
  unsigned count = workers < blocks ? workers : static_cast<unsigned>(blocks);
  std::vector<std::thread> threads;
  threads.reserve(count);
  for (unsigned w = 0; w < count; ++w) {
    threads.emplace_back([&] {
      for (;;) {
        uint64_t b = next.fetch_add(1);
        if (b >= blocks) break;
        body(b);
      }
    });
  }
  for (auto& t : threads) t.join();
}

double tree_reduce(std::vector<double> values) {
  if (values.empty()) return 0.0;
  while (values.size() > 1) {
    std::vector<double> next;
    next.reserve((values.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < values.size(); i += 2) next.push_back(values[i] + values[i + 1]);
    if (values.size() & 1) next.push_back(values.back());
    values = std::move(next);
  }
  return values[0];
}

}  // namespace heckeqf
