#include "nomfix/atom.hpp"

#include <cctype>
#include <stdexcept>

namespace nomfix {

std::string Atom::str() const {
  if (origin_ == AtomOrigin::user) return name_;
  return name_ + std::to_string(gen_index_);
}

bool valid_fresh_prefix(const std::string& prefix) {
  if (prefix.size() < 2 || prefix[0] != '#') return false;
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    const auto ch = static_cast<unsigned char>(prefix[i]);
    if (!std::isalpha(ch) && ch != '_') return false;
  }
  return true;
}

NameGenerator::NameGenerator(std::string prefix, std::uint64_t start)
    : prefix_(std::move(prefix)), counter_(start) {
  if (!valid_fresh_prefix(prefix_)) {
    throw std::invalid_argument("fresh-atom prefix must be '#' followed by letters: " + prefix_);
  }
}

Atom NameGenerator::fresh() { return Atom::generated(prefix_, counter_++); }

void NameGenerator::avoid(const Atom& a) {
  if (a.is_generated() && a.name() == prefix_ && a.gen_index() >= counter_) {
    counter_ = a.gen_index() + 1;
  }
}

NameGenerator NameGenerator::fork(std::uint64_t stride) {
  NameGenerator child(prefix_, counter_);
  counter_ += stride;
  return child;
}

}  // namespace nomfix
