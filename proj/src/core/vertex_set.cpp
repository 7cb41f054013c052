#include "core/vertex_set.hpp"

namespace aoforge {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::range(int n) {
  if (n <= 0) return VertexSet();
  if (n >= kCapacity) return VertexSet(~Mask{0});
  return VertexSet((Mask{1} << n) - 1);
}

VertexSet VertexSet::from(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace aoforge
