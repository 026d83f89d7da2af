#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace nomfix {

enum class AtomOrigin : std::uint8_t { user, generated };

/// An object-level name. User atoms come from input text; generated atoms come
/// from a NameGenerator and are printed as `<prefix><index>` (e.g. `#c3`).
/// Distinct values always denote distinct names.
class Atom {
 public:
  Atom() = default;

  static Atom user(std::string name) { return Atom(std::move(name), AtomOrigin::user, 0); }
  static Atom generated(std::string prefix, std::uint64_t index) {
    return Atom(std::move(prefix), AtomOrigin::generated, index);
  }

  const std::string& name() const { return name_; }
  AtomOrigin origin() const { return origin_; }
  std::uint64_t gen_index() const { return gen_index_; }
  bool is_generated() const { return origin_ == AtomOrigin::generated; }

  std::string str() const;

  // User atoms order before generated ones.
  friend auto operator<=>(const Atom& l, const Atom& r) {
    if (auto c = l.origin_ <=> r.origin_; c != 0) return c;
    if (auto c = l.name_ <=> r.name_; c != 0) return c;
    return l.gen_index_ <=> r.gen_index_;
  }
  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  Atom(std::string name, AtomOrigin origin, std::uint64_t index)
      : name_(std::move(name)), origin_(origin), gen_index_(index) {}

  std::string name_;
  AtomOrigin origin_ = AtomOrigin::user;
  std::uint64_t gen_index_ = 0;
};

class Var {
 public:
  Var() = default;
  explicit Var(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  friend auto operator<=>(const Var&, const Var&) = default;
  friend bool operator==(const Var&, const Var&) = default;

 private:
  std::string name_;
};

inline constexpr const char* kDefaultFreshPrefix = "#c";

/// Supply of new atoms. The prefix must start with '#', which no user atom can.
/// One generator per top-level query; not thread-safe.
class NameGenerator {
 public:
  explicit NameGenerator(std::string prefix = kDefaultFreshPrefix, std::uint64_t start = 0);

  Atom fresh();

  /// Make sure future atoms differ from `a` (bumps the counter past it).
  void avoid(const Atom& a);

  /// Splits off a generator whose indices start `stride` above this one's
  /// counter; this generator then continues above that range.
  NameGenerator fork(std::uint64_t stride);

  std::uint64_t counter() const { return counter_; }
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
  std::uint64_t counter_;
};

inline Atom fresh_atom(NameGenerator& gen) { return gen.fresh(); }

/// Returns true when `prefix` is usable for generated atoms: '#' followed by
/// letters or underscores.
bool valid_fresh_prefix(const std::string& prefix);

}  // namespace nomfix

template <>
struct std::hash<nomfix::Atom> {
  std::size_t operator()(const nomfix::Atom& a) const noexcept {
    return std::hash<std::string>{}(a.name()) ^ (a.gen_index() * 0x9e3779b97f4a7c15ULL) ^
           static_cast<std::size_t>(a.origin());
  }
};
