// Copyright 2026 The sbm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SBM_GAIN_HEAP_HPP_
#define SBM_GAIN_HEAP_HPP_

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>

#include "sbm/graph.hpp"

namespace sbm {

struct HeapEntry {
  double gain;  // cached; an upper bound on the edge's current gain
  EdgeId edge;
};

// The total order shared by every algorithm: larger gain first, then the
// smaller edge id.
inline bool ranks_above(const HeapEntry& a, const HeapEntry& b) {
  return a.gain > b.gain || (a.gain == b.gain && a.edge < b.edge);
}

// Binary max-heap of (gain, edge) over caller-owned storage.
//
// The heap never grows past its initial contents: entries only leave through
// pop() and come back through push(), so a fixed slice of one big array can
// back each per-vertex heap.
class GainHeap {
 public:
  GainHeap() = default;

  // Takes the current contents of `storage` as the initial entries; each
  // counts as one push.
  explicit GainHeap(std::span<HeapEntry> storage)
      : data_(storage.data()), size_(storage.size()), capacity_(storage.size()),
        pushes_(storage.size()) {
    std::make_heap(data_, data_ + size_, Below{});
  }

  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }
  const HeapEntry& top() const {
    assert(size_ > 0);
    return data_[0];
  }

  void pop() {
    assert(size_ > 0);
    std::pop_heap(data_, data_ + size_, Below{});
    --size_;
    ++pops_;
  }

  void push(const HeapEntry& entry) {
    assert(size_ < capacity_);
    data_[size_++] = entry;
    std::push_heap(data_, data_ + size_, Below{});
    ++pushes_;
  }

  // Raising the root's key never breaks the heap property.
  void raise_top(double gain) {
    assert(size_ > 0 && gain >= data_[0].gain);
    data_[0].gain = gain;
  }

  std::uint64_t pushes() const { return pushes_; }
  std::uint64_t pops() const { return pops_; }

 private:
  struct Below {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const { return ranks_above(b, a); }
  };

  HeapEntry* data_ = nullptr;
  std::size_t size_ = 0;
  std::size_t capacity_ = 0;
  std::uint64_t pushes_ = 0;
  std::uint64_t pops_ = 0;
};

}  // namespace sbm

#endif  // SBM_GAIN_HEAP_HPP_
