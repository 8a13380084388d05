#pragma once

// Linear characters of centralizers of cuspidal elements and mechanical
// checks of the decompositions of rho_W and omega_W into induced characters.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxsol/characters.hpp"
#include "coxsol/descent.hpp"
#include "coxsol/orlik_solomon.hpp"

namespace coxsol {

/// Per-group cache of the expensive objects the checks share.
class GroupContext {
 public:
  /// Empty `hyperplane_order` selects the default NBC order.
  explicit GroupContext(GroupPtr g, std::vector<Element> hyperplane_order = {});

  const GroupPtr& group() const { return g_; }
  const IdempotentFamily& descent() const;
  const OSAlgebra& os() const;

  const ClassFunction& phi_top(Subset L) const;    // Phi_L on W_L
  const ClassFunction& psi_top(Subset L) const;    // Psi_L on W_L
  const ClassFunction& phi_tilde(Subset L) const;  // on N_W(W_L)
  const ClassFunction& psi_tilde(Subset L) const;
  const std::vector<ClassFunction>& phi_lambda() const;
  const std::vector<ClassFunction>& psi_lambda() const;

 private:
  GroupPtr g_;
  std::vector<Element> order_;
  mutable std::unique_ptr<IdempotentFamily> family_;
  mutable std::unique_ptr<OSAlgebra> os_;
  mutable std::map<Subset, ClassFunction> phi_top_, psi_top_, phi_tilde_, psi_tilde_;
  mutable std::optional<std::vector<ClassFunction>> phi_lambda_, psi_lambda_;
};

enum class Provenance { ExplicitConstruction, ExhaustiveSearch };
std::string to_string(Provenance p);

/// Characters attached to one cuspidal class C of W_L.
struct CuspidalAssignment {
  Element representative = 0;                // w_C
  ClassFunction phi, psi;                    // on C_{W_L}(w_C)
  std::optional<ClassFunction> phi_tilde;    // on C_W(w_C)
  std::optional<ClassFunction> psi_tilde;
};

struct CharacterAssignment {
  Subset L = 0;
  Provenance provenance = Provenance::ExplicitConstruction;
  std::string construction;  // which recipe produced it
  std::vector<CuspidalAssignment> classes;
};

/// One checked identity; `values` holds the difference of both sides, or is
/// empty for yes/no checks.
struct Residual {
  std::string identity;
  bool holds = false;
  std::optional<ClassFunction> difference;

  static Residual of(std::string identity, const ClassFunction& lhs, const ClassFunction& rhs);
  static Residual check(std::string identity, bool holds);
};

enum class Status { Verified, Failed, SearchExhausted };
std::string to_string(Status s);

struct ConjectureReport {
  char conjecture = 'B';
  std::optional<Subset> L;
  Status status = Status::Failed;
  std::vector<Residual> residuals;
  std::vector<CharacterAssignment> assignments;
  std::vector<std::string> notes;

  bool verified() const { return status == Status::Verified; }
  /// Sets status from the residuals.
  void finish();
};

/// phi, psi on C_{W_L}(w_C) for every cuspidal class of W_L, by the explicit
/// recipes for |L| <= 2 and by exhaustive search otherwise. Throws
/// SearchExhausted if no combination of linear characters works.
CharacterAssignment construct_B_characters(const GroupContext& ctx, Subset L);
/// Checks Conjecture B for W_L (default: W itself).
ConjectureReport verify_B(const GroupContext& ctx);
ConjectureReport verify_B(const GroupContext& ctx, Subset L);

/// Extends the B characters of W_L to C_W(w_C). Throws UnsupportedCase or
/// SearchExhausted when no recipe applies and the search fails.
CharacterAssignment construct_C_characters(const GroupContext& ctx, Subset L);
ConjectureReport verify_C(const GroupContext& ctx, Subset L);
/// Throws PrerequisiteFailed unless verify_C passes for every shape.
ConjectureReport verify_A(const GroupContext& ctx);

/// For W_L of odd dihedral type: a_L f_j . w = eps(w) alpha_L(w) (e_L f_j w),
/// read through the map e_L f_i -> a_L f_i, for w in {st, w_L} and N_L.
std::vector<Residual> check_final_identity(const GroupContext& ctx, Subset L);

/// Longest element of W_L.
Element longest_in(const CoxeterGroup& g, Subset L);

/// Table of Phi_lambda, rho, Psi_lambda and omega for a dihedral group, with
/// columns 1, s, t, w0, (st)^i (m even) or 1, s, (st)^i (m odd).
struct DihedralTable {
  int m = 0;
  std::vector<std::string> columns;
  std::vector<Element> column_elements;
  std::vector<std::string> rows;
  std::vector<std::vector<Cyclotomic>> values;
};
DihedralTable emit_table(const GroupContext& ctx);

}  // namespace coxsol
