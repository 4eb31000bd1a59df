#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cforce/errors.hpp"

namespace cforce {

// Subset of the vertices {0,...,n-1} of a fixed ambient size n, stored as a
// bitset. Binary set operations require both operands to share the same
// ambient size; members iterate in ascending id order.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int ambient) : n_(ambient), words_((ambient + 63) / 64, 0) {}

    static VertexSet full(int ambient) {
        VertexSet s(ambient);
        for (auto& w : s.words_) w = ~0ull;
        s.trim();
        return s;
    }

    static VertexSet of(int ambient, std::initializer_list<int> members) {
        VertexSet s(ambient);
        for (int v : members) s.add(v);
        return s;
    }

    int ambient_size() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ull;
    }

    void add(int v) {
        assert(v >= 0 && v < n_);
        words_[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < n_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(1ull << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool empty() const { return !any(); }

    // Smallest member, or -1 when empty.
    int first() const { return next_after(-1); }

    // Smallest member greater than v, or -1 when none.
    int next_after(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        std::uint64_t w = words_[wi] & (~0ull << (start & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // The sole member of a - b, or -1 when |a - b| != 1. Allocation-free;
    // this is the forcing engine's hot path.
    static int unique_member_of_difference(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        int found = -1;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t d = a.words_[i] & ~b.words_[i];
            if (!d) continue;
            if (found != -1 || std::popcount(d) > 1) return -1;
            found = static_cast<int>(i * 64) + std::countr_zero(d);
        }
        return found;
    }

    bool operator==(const VertexSet& o) const = default;

    // Orders sets by their ascending member sequences.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        int x = a.first(), y = b.first();
        while (x != -1 && y != -1) {
            if (x != y) return x < y;
            x = a.next_after(x);
            y = b.next_after(y);
        }
        return x == -1 && y != -1;
    }

    class const_iterator {
      public:
        using value_type = int;
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = s_->next_after(v_);
            return *this;
        }
        bool operator==(const const_iterator& o) const { return v_ == o.v_; }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

      private:
        friend class VertexSet;
        const_iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        const VertexSet* s_;
        int v_;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    // "{0 1 4}"; "{}" when empty.
    std::string to_string() const {
        std::string out = "{";
        bool space = false;
        for (int v : *this) {
            if (space) out += ' ';
            out += std::to_string(v);
            space = true;
        }
        out += '}';
        return out;
    }

  private:
    void trim() {
        if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (~0ull >> (64 - n_ % 64));
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph over vertex ids 0..n-1: no self-loops, no
// multi-edges, adjacency symmetric by construction.
class Graph {
  public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const VertexSet& neighbors(int v) const {
        assert(v >= 0 && v < n_);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return neighbors(v).count(); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }

    int max_degree() const;
    int min_degree() const;

    VertexSet full_set() const { return VertexSet::full(n_); }

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edge_list() const;

    // Induced subgraph on the surviving vertices, which are renumbered densely
    // in ascending original id order; the mapping sends new ids to old ones.
    // Removing every vertex is rejected.
    std::pair<Graph, std::vector<int>> without_vertices(const VertexSet& removed) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  private:
    Graph() = default;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

}  // namespace cforce
