#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mapart/denominator_set.hpp"
#include "mapart/groebner.hpp"
#include "mapart/order_spec.hpp"

namespace mapart {

inline constexpr const char* kSingularInputFile = "apartbasisin.sing";
inline constexpr const char* kSingularOutputFile = "apartbasisout.m";
inline constexpr const char* kFormProcedureFile = "apartreduce.h";
inline constexpr const char* kFormSymbolsFile = "apartsymbols.h";
inline constexpr const char* kFormRulesFile = "apartrules.h";

/// dir itself, or $MAPART_TMPDIR (falling back to the system temporary
/// directory plus "mapart") when dir is empty.
std::filesystem::path resolve_output_dir(const std::filesystem::path& dir);

/// Singular job computing the reduced basis of <q_i d_i - 1> under spec and
/// writing it as "{g1,g2,...}" to apartbasisout.m. Returns the job file.
std::filesystem::path write_singular_basis_input(const DenominatorSet& dens, const OrderSpec& spec,
                                                 const std::filesystem::path& dir);

std::string singular_basis_input(const DenominatorSet& dens, const OrderSpec& spec);

/// Parses "{g1,g2,...}" over the ring of dens into the reduced basis under
/// spec, normalized like buchberger output.
GroebnerBasis read_basis_output(std::string_view text, const DenominatorSet& dens, const OrderSpec& spec);
GroebnerBasis read_basis_output_file(const std::filesystem::path& file, const DenominatorSet& dens,
                                     const OrderSpec& spec);

/// One rewrite rule lm -> -(g - lc*lm)/lc per basis element.
struct RewriteRule {
  Monomial lhs;
  Polynomial rhs;
};

std::vector<RewriteRule> form_rules(const GroebnerBasis& basis);

/// Applies rule once to the term c*m (m divisible by rule.lhs).
Polynomial apply_rule(const RewriteRule& rule, const Monomial& m, const Rational& c);

struct FormFiles {
  std::string procedure;
  std::string symbols;
  std::string rules;
};

/// Procedure apartreduce(expr) implementing the iterated reduction with the
/// basis' leading-term rules. Throws on a basis that is not reduced.
FormFiles form_procedure(const GroebnerBasis& basis, const OrderSpec& spec);

/// Writes apartreduce.h, apartsymbols.h and apartrules.h. Returns the
/// procedure file.
std::filesystem::path write_form_procedure(const GroebnerBasis& basis, const OrderSpec& spec,
                                           const std::filesystem::path& dir);

}  // namespace mapart
