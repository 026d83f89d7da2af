#include "nomfix/permutation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nomfix {

Swapping::Swapping(Atom left, Atom right) : left_(std::move(left)), right_(std::move(right)) {
  if (left_ == right_) {
    throw std::invalid_argument("swapping of an atom with itself: (" + left_.str() + " " +
                                right_.str() + ")");
  }
}

Atom Permutation::apply(const Atom& a) const {
  Atom x = a;
  for (auto it = swaps_.rbegin(); it != swaps_.rend(); ++it) x = it->apply(x);
  return x;
}

Atom Permutation::apply_inverse(const Atom& a) const {
  Atom x = a;
  for (const auto& s : swaps_) x = s.apply(x);
  return x;
}

std::set<Atom> Permutation::mentioned() const {
  std::set<Atom> out;
  for (const auto& s : swaps_) {
    out.insert(s.left());
    out.insert(s.right());
  }
  return out;
}

bool Permutation::acts_as_identity() const {
  if (swaps_.empty()) return true;
  for (const auto& a : mentioned()) {
    if (apply(a) != a) return false;
  }
  return true;
}

Permutation Permutation::normalized() const {
  const auto atoms = mentioned();
  std::map<Atom, Atom> image;
  for (const auto& a : atoms) image.emplace(a, apply(a));

  std::set<Atom> visited;
  std::vector<Swapping> out;
  for (const auto& start : atoms) {
    if (visited.count(start) || image.at(start) == start) continue;
    std::vector<Atom> cycle{start};
    visited.insert(start);
    for (Atom x = image.at(start); x != start; x = image.at(x)) {
      cycle.push_back(x);
      visited.insert(x);
    }
    // (x1 .. xk) == (x1 xk)(x1 xk-1)...(x1 x2), rightmost first.
    for (std::size_t i = cycle.size() - 1; i >= 1; --i) out.emplace_back(cycle[0], cycle[i]);
  }
  return Permutation(std::move(out));
}

bool operator==(const Permutation& l, const Permutation& r) {
  auto atoms = l.mentioned();
  atoms.merge(r.mentioned());
  return std::all_of(atoms.begin(), atoms.end(),
                     [&](const Atom& a) { return l.apply(a) == r.apply(a); });
}

bool canonical_less(const Permutation& l, const Permutation& r) {
  const auto ln = l.normalized();
  const auto rn = r.normalized();
  return std::lexicographical_compare(
      ln.swappings().begin(), ln.swappings().end(), rn.swappings().begin(),
      rn.swappings().end(), [](const Swapping& x, const Swapping& y) {
        if (x.left() != y.left()) return x.left() < y.left();
        return x.right() < y.right();
      });
}

Atom apply_perm_atom(const Permutation& p, const Atom& a) { return p.apply(a); }

Permutation invert_perm(const Permutation& p) {
  std::vector<Swapping> rev(p.swappings().rbegin(), p.swappings().rend());
  return Permutation(std::move(rev));
}

Permutation compose_perm(const Permutation& p, const Permutation& q) {
  std::vector<Swapping> left = p.swappings();
  const auto& right = q.swappings();
  std::size_t skip = 0;
  while (!left.empty() && skip < right.size() && left.back() == right[skip]) {
    left.pop_back();
    ++skip;
  }
  left.insert(left.end(), right.begin() + static_cast<std::ptrdiff_t>(skip), right.end());
  return Permutation(std::move(left));
}

Permutation conjugate_perm(const Permutation& p, const Permutation& r) {
  return compose_perm(compose_perm(r, p), invert_perm(r));
}

std::set<Atom> support_perm(const Permutation& p) {
  std::set<Atom> out;
  for (const auto& a : p.mentioned()) {
    if (p.apply(a) != a) out.insert(a);
  }
  return out;
}

std::set<Atom> diff_set(const Permutation& p, const Permutation& q) {
  auto atoms = p.mentioned();
  atoms.merge(q.mentioned());
  std::set<Atom> out;
  for (const auto& a : atoms) {
    if (p.apply(a) != q.apply(a)) out.insert(a);
  }
  return out;
}

}  // namespace nomfix
