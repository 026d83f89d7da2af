#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "nomfix/term.hpp"

namespace nomfix {

enum class Theory { none, A, C, AC };

std::string theory_name(Theory th);
std::optional<Theory> parse_theory(const std::string& s);

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Function symbols with their equational theory.
class Signature {
 public:
  Signature() = default;
  explicit Signature(bool permissive) : permissive_(permissive) {}

  void declare(const std::string& symbol, Theory th);
  bool declared(const std::string& symbol) const { return symbols_.count(symbol) != 0; }
  /// Undeclared symbols are Theory::none in permissive mode, an error otherwise.
  Theory theory(const std::string& symbol) const;

  bool permissive() const { return permissive_; }
  void set_permissive(bool p) { permissive_ = p; }
  const std::map<std::string, Theory>& symbols() const { return symbols_; }

  bool has_theory(Theory th) const;

 private:
  std::map<std::string, Theory> symbols_;
  bool permissive_ = false;
};

/// Throws SignatureError for undeclared symbols or C symbols not applied to a pair.
void check_well_formed(const Signature& sig, const Term& t);

/// Merges nested applications of the same A/AC symbol into one n-ary application.
Term flatten(const Signature& sig, const Term& t);

}  // namespace nomfix
