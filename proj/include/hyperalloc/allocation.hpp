#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hyperalloc {

using Vertex = std::uint32_t;
using Channel = std::uint32_t;

/// Vertex numbering shared by every allocator: cellular UEs 0..N-1, then D2D
/// pairs N..N+M-1.
struct VertexLayout {
  std::size_t n_cellular = 0;
  std::size_t n_d2d = 0;

  std::size_t size() const { return n_cellular + n_d2d; }
  bool is_cellular(Vertex v) const { return v < n_cellular; }
  bool is_d2d(Vertex v) const { return v >= n_cellular && v < size(); }
  Vertex cellular(std::size_t n) const { return static_cast<Vertex>(n); }
  Vertex d2d(std::size_t m) const { return static_cast<Vertex>(n_cellular + m); }
  std::size_t d2d_index(Vertex v) const { return v - n_cellular; }

  friend bool operator==(const VertexLayout&, const VertexLayout&) = default;
};

/// Channel assignment matrix in per-vertex form: each vertex holds at most
/// one channel or is explicitly unallocated.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(VertexLayout layout) : layout_(layout), channel_(layout.size()) {}
  Allocation(std::size_t n_cellular, std::size_t n_d2d)
      : Allocation(VertexLayout{n_cellular, n_d2d}) {}

  const VertexLayout& layout() const { return layout_; }
  std::size_t size() const { return channel_.size(); }

  std::optional<Channel> channel(Vertex v) const { return channel_.at(v); }
  bool is_allocated(Vertex v) const { return channel_.at(v).has_value(); }
  bool on_channel(Vertex v, Channel k) const { return channel_.at(v) == k; }

  void assign(Vertex v, Channel k) { channel_.at(v) = k; }
  void unassign(Vertex v) { channel_.at(v).reset(); }

  /// Vertices on channel k (the co-channel set), ascending.
  std::vector<Vertex> co_channel(Channel k) const {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < channel_.size(); ++v) {
      if (channel_[v] == k) members.push_back(v);
    }
    return members;
  }

  std::size_t n_allocated() const {
    std::size_t count = 0;
    for (const auto& c : channel_) count += c.has_value();
    return count;
  }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  VertexLayout layout_{};
  std::vector<std::optional<Channel>> channel_;
};

}  // namespace hyperalloc
