#include "dicirc/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "dicirc/numth.hpp"

namespace dicirc {

DicyclicGroup::DicyclicGroup(std::uint32_t p) : p_(p), two_p_(2 * p) {
  if (!is_prime(p)) throw std::invalid_argument("DicyclicGroup: p must be prime");
  if (4 * p - 1 > 63) throw std::invalid_argument("DicyclicGroup: order too large for bitmask sets");
}

GroupElement DicyclicGroup::mul(GroupElement g, GroupElement h) const {
  const std::uint32_t i = g.exponent, j = h.exponent;
  if (g.b_part == 0 && h.b_part == 0) return {0, (i + j) % two_p_};
  if (g.b_part == 0 && h.b_part == 1) return {1, (i + j) % two_p_};
  if (g.b_part == 1 && h.b_part == 0) return {1, (i + two_p_ - j % two_p_) % two_p_};
  return {0, (i + two_p_ - j % two_p_ + p_) % two_p_};  // (a^i b)(a^j b) = a^{i-j+p}
}

GroupElement DicyclicGroup::inverse(GroupElement g) const {
  if (g.b_part == 0) return {0, (two_p_ - g.exponent) % two_p_};
  return {1, (g.exponent + p_) % two_p_};
}

GroupElement DicyclicGroup::point(std::uint32_t index) const {
  if (index >= point_count()) throw std::out_of_range("point: index out of range");
  if (index < two_p_ - 1) return {0, index + 1};
  return {1, index - (two_p_ - 1)};
}

std::uint32_t DicyclicGroup::point_index(GroupElement g) const {
  if (g.b_part == 0) {
    if (g.exponent == 0) throw std::invalid_argument("point_index: identity is not a point of A");
    return g.exponent - 1;
  }
  return two_p_ - 1 + g.exponent;
}

GroupElement DicyclicGroup::vertex(std::uint32_t index) const {
  if (index == 0) return identity();
  return point(index - 1);
}

std::uint32_t DicyclicGroup::vertex_index(GroupElement g) const {
  if (g.b_part == 0 && g.exponent == 0) return 0;
  return point_index(g) + 1;
}

GroupElement DicyclicGroup::apply_automorphism(Automorphism alpha, GroupElement g) const {
  const std::uint64_t s = alpha.s, t = alpha.t;
  if (g.b_part == 0) return {0, static_cast<std::uint32_t>(s * g.exponent % two_p_)};
  return {1, static_cast<std::uint32_t>((s * g.exponent + t) % two_p_)};
}

ConnectionSet DicyclicGroup::apply_to_set(Automorphism alpha, ConnectionSet s) const {
  ConnectionSet image = 0;
  while (s != 0) {
    const std::uint32_t i = static_cast<std::uint32_t>(__builtin_ctzll(s));
    s &= s - 1;
    image |= ConnectionSet{1} << point_index(apply_automorphism(alpha, point(i)));
  }
  return image;
}

PointPermutation DicyclicGroup::point_permutation(Automorphism alpha) const {
  PointPermutation perm(point_count());
  for (std::uint32_t i = 0; i < point_count(); ++i)
    perm[i] = point_index(apply_automorphism(alpha, point(i)));
  return perm;
}

std::vector<std::uint32_t> DicyclicGroup::generated_subgroup(ConnectionSet s) const {
  const std::uint32_t n = order();
  std::vector<GroupElement> gens;
  for (std::uint32_t i = 0; i < point_count(); ++i)
    if (s >> i & 1) gens.push_back(point(i));

  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> queue = {0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const GroupElement g = vertex(queue[head]);
    for (const GroupElement& x : gens) {
      const std::uint32_t v = vertex_index(mul(g, x));
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool DicyclicGroup::is_connected(ConnectionSet s) const {
  return generated_subgroup(s).size() == order();
}

std::vector<Automorphism> all_automorphisms(std::uint32_t p) {
  const UnitGroup2p units = unit_group_2p(p);
  std::vector<Automorphism> family;
  family.reserve(units.elements.size() * 2 * p);
  for (std::uint64_t s : units.elements)
    for (std::uint32_t t = 0; t < 2 * p; ++t)
      family.push_back({static_cast<std::uint32_t>(s), t});
  return family;
}

namespace {

// Powers a^0..a^{m}, a^i b expressed through the generator images x, y:
// phi(a^i) = x^i, phi(a^i b) = x^i y.
std::uint32_t element_order(const DicyclicGroup& g, GroupElement x) {
  GroupElement acc = x;
  std::uint32_t m = 1;
  while (!(acc == g.identity())) {
    acc = g.mul(acc, x);
    ++m;
  }
  return m;
}

}  // namespace

std::vector<PointPermutation> full_automorphisms_bruteforce(std::uint32_t p) {
  if (4 * p > 16)
    throw std::invalid_argument("full_automorphisms_bruteforce: order bound 16 exceeded");
  const DicyclicGroup g(p);
  const std::uint32_t n = g.order();

  std::vector<GroupElement> elems;
  for (std::uint32_t v = 0; v < n; ++v) elems.push_back(g.vertex(v));

  std::vector<PointPermutation> result;
  for (const GroupElement& x : elems) {
    if (element_order(g, x) != 2 * p) continue;  // image of a keeps order 2p
    // x^i for i = 0..2p-1
    std::vector<GroupElement> xpow(2 * p);
    xpow[0] = g.identity();
    for (std::uint32_t i = 1; i < 2 * p; ++i) xpow[i] = g.mul(xpow[i - 1], x);
    for (const GroupElement& y : elems) {
      // defining relations: y^2 = x^p and y^-1 x y = x^-1
      if (!(g.mul(y, y) == xpow[p])) continue;
      if (!(g.mul(g.mul(g.inverse(y), x), y) == g.inverse(x))) continue;
      // build the candidate map and keep it only if bijective
      std::vector<std::uint32_t> image(n);
      std::vector<bool> hit(n, false);
      bool bijective = true;
      for (std::uint32_t v = 0; v < n && bijective; ++v) {
        const GroupElement e = elems[v];
        const GroupElement img =
            e.b_part == 0 ? xpow[e.exponent] : g.mul(xpow[e.exponent], y);
        const std::uint32_t w = g.vertex_index(img);
        image[v] = w;
        if (hit[w]) bijective = false;
        hit[w] = true;
      }
      if (!bijective) continue;
      PointPermutation perm(g.point_count());
      for (std::uint32_t i = 0; i < g.point_count(); ++i) perm[i] = image[i + 1] - 1;
      result.push_back(std::move(perm));
    }
  }
  return result;
}

}  // namespace dicirc
