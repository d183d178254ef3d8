#pragma once

#include <string>
#include <vector>

namespace mirig {

  using OperationTable = std::vector<std::vector<int>>;

  // A finite monoid given by its multiplication table.
  struct FiniteMonoid {
    std::vector<std::string> names;
    OperationTable           mul;
    int                      identity = 0;
  };

  // A finite rig given by its operation tables.
  struct FiniteRigTable {
    std::vector<std::string> names;
    OperationTable           add;
    OperationTable           mul;
    int                      zero = 0;
    int                      one  = 0;

    int size() const noexcept {
      return static_cast<int>(names.size());
    }
  };

  struct AxiomViolation {
    std::string      axiom;
    std::vector<int> witness;
  };

  struct RigAxiomReport {
    std::vector<AxiomViolation> violations;
    bool                        commutative = true;  // multiplication

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // Exhaustive check of the rig axioms (and x*x = x when require_mirig);
  // every failing instance is listed.
  RigAxiomReport verify_rig_axioms(FiniteRigTable const& t, bool require_mirig);

  // N_{m,n} with elements "0".."m+n-1".
  FiniteRigTable quotient_nat_table(int m, int n);

  // Throws PreconditionError unless the table is an idempotent monoid.
  void check_idempotent_monoid(FiniteMonoid const& m);

  // M + {0, 2}: 0 absorbs under the product and is the additive identity,
  // 2 absorbs under the sum and under the product with everything but 0,
  // and any two elements of M add to 2. Elements of M keep their indices;
  // 0 and 2 are appended.
  FiniteRigTable campion_mirig(FiniteMonoid const& m);

  FiniteMonoid trivial_monoid();
  // M_n from the tree model, n <= 3, elements named by shortest words
  FiniteMonoid free_idempotent_monoid(int n);

  // Smallest (m, n) with 1 + ... + 1 (m+n times) = 1 + ... + 1 (m times).
  std::pair<int, int> characteristic(FiniteRigTable const& t);

}  // namespace mirig
