#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace heckeqf {

unsigned default_workers();

// Runs body(b) for b in [0, blocks).  Thread assignment is dynamic, so the
// body must write only to block-indexed storage; combined with a fixed
// reduction topology this keeps results bit-identical at any worker count.
void parallel_blocks(uint64_t blocks, unsigned workers, const std::function<void(uint64_t)>& body);

// Pairwise reduction tree over the input order: adjacent pairs are summed
// until one value remains.  Topology depends only on values.size().
double tree_reduce(std::vector<double> values);

}  // namespace heckeqf
