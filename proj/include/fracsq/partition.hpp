#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "disjoint_sets.hpp"

namespace fracsq {

/// A labelled partition of `elements` into `count` components. Labels are
/// canonical: components are numbered 0, 1, ... in order of first occurrence
/// along `elements`.
template <class T>
struct Partition {
  std::vector<T> elements;
  std::vector<int> label;
  int count = 0;

  std::vector<T> members(int id) const {
    std::vector<T> out;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (label[i] == id) out.push_back(elements[i]);
    return out;
  }

  std::vector<std::size_t> member_indices(int id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (label[i] == id) out.push_back(i);
    return out;
  }
};

/// Canonical labels from a disjoint-set forest over the same element order.
inline std::vector<int> canonical_labels(DisjointSets& sets, int* count = nullptr) {
  std::vector<int> root_label(sets.size(), -1);
  std::vector<int> label(sets.size());
  int next = 0;
  for (std::uint32_t i = 0; i < sets.size(); ++i) {
    const auto r = sets.find(i);
    if (root_label[r] < 0) root_label[r] = next++;
    label[i] = root_label[r];
  }
  if (count) *count = next;
  return label;
}

template <class T>
Partition<T> make_partition(std::vector<T> elements, DisjointSets& sets) {
  if (sets.size() != elements.size()) throw std::logic_error("partition: size mismatch");
  Partition<T> p;
  p.label = canonical_labels(sets, &p.count);
  p.elements = std::move(elements);
  return p;
}

/// True iff two labelings of the same element sequence induce the same
/// partition (equal up to renaming of labels).
inline bool same_partition(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  std::vector<int> a_to_b, b_to_a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto la = static_cast<std::size_t>(a[i]), lb = static_cast<std::size_t>(b[i]);
    if (a_to_b.size() <= la) a_to_b.resize(la + 1, -1);
    if (b_to_a.size() <= lb) b_to_a.resize(lb + 1, -1);
    if (a_to_b[la] < 0 && b_to_a[lb] < 0) {
      a_to_b[la] = b[i];
      b_to_a[lb] = a[i];
    } else if (a_to_b[la] != b[i] || b_to_a[lb] != a[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace fracsq
