#pragma once

#include <numeric>
#include <vector>

namespace bsurf {

// Disjoint sets with a parity bit relative to the root.
class UnionFind {
public:
  explicit UnionFind(int n = 0) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    parity_.push_back(0);
    rank_.push_back(0);
    return static_cast<int>(parent_.size()) - 1;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  int find(int x) {
    int p = 0;
    return find(x, p);
  }

  // Root of x and the parity of x relative to it.
  int find(int x, int& par) {
    int acc = 0, r = x;
    while (parent_[r] != r) {
      acc ^= parity_[r];
      r = parent_[r];
    }
    // compress
    int cur = x, cur_par = acc;
    while (parent_[cur] != cur) {
      int next = parent_[cur], np = cur_par ^ parity_[cur];
      parent_[cur] = r;
      parity_[cur] = cur_par;
      cur = next;
      cur_par = np;
    }
    par = acc;
    return r;
  }

  // Returns false when x and y are already joined with the other parity.
  bool unite(int x, int y, int par = 0) {
    int px = 0, py = 0;
    int rx = find(x, px), ry = find(y, py);
    if (rx == ry) return (px ^ py) == par;
    if (rank_[rx] < rank_[ry]) {
      std::swap(rx, ry);
      std::swap(px, py);
    }
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ par;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    return true;
  }

  bool same(int x, int y) { return find(x) == find(y); }

  // Dense labels 0..k-1 in order of first appearance.
  std::vector<int> labels(int* count = nullptr) {
    std::vector<int> root_label(parent_.size(), -1), out(parent_.size());
    int k = 0;
    for (int i = 0; i < size(); ++i) {
      int r = find(i);
      if (root_label[r] < 0) root_label[r] = k++;
      out[i] = root_label[r];
    }
    if (count) *count = k;
    return out;
  }

private:
  std::vector<int> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
};

} // namespace bsurf
