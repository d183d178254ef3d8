#include "verify.hpp"

#include "mirig/counting.hpp"
#include "mirig/expression.hpp"
#include "mirig/oracle.hpp"
#include "mirig/rig_table.hpp"
#include "mirig/subsemigroup.hpp"
#include "mirig/tree.hpp"

namespace mirig_cli {

  namespace {
    using namespace mirig;

    std::string str(BigInt const& k) {
      return k.str();
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }
  }  // namespace

  std::vector<Check> checks(Suite suite) {
    bool const         full = suite == Suite::full;
    std::vector<Check> out;
    auto add = [&](std::string name, std::string expected, std::string reference,
                   std::function<std::string()> compute) {
      out.push_back(Check{std::move(name), std::move(expected), std::move(reference),
                          std::move(compute)});
    };

    std::vector<std::string> const monoid{"1", "2", "7", "160"};
    for (int n = 0; n <= 3; ++n) {
      add("|M_" + std::to_string(n) + "|", monoid[n], "size of the free idempotent monoid",
          [n] { return str(count_free_monoid(n)); });
    }
    add("words abc and abcbabc", "equal", "word problem in the free idempotent monoid",
        [] {
          return words_equivalent(parse_word("abc"), parse_word("abcbabc")) ? "equal"
                                                                            : "different";
        });

    std::vector<std::string> const replete{"2", "4", "42", "18030"};
    for (int n = 0; n <= (full ? 3 : 2); ++n) {
      add("replete subsemigroups of T_" + std::to_string(n), replete[n],
          "replete subsemigroup census",
          [n] { return std::to_string(enumerate_replete(n).size()); });
    }
    add("replete subsemigroups of T_3 of height <= 2", "116", "height-bounded replete count",
        [] { return str(count_replete_bounded_height(3, 2)); });
    add("height-3 replete branch sets", "22", "closed height-3 rightmost path sets",
        [] { return std::to_string(height3_replete_branch_sets().size()); });

    std::vector<std::string> const mirig{"4", "13", "284", "510605"};
    for (int n = 0; n <= (full ? 3 : 2); ++n) {
      for (auto [strategy, label] : {std::pair{CountStrategy::triples, "triples"},
                                     std::pair{CountStrategy::grouped, "grouped"}}) {
        add("|R_" + std::to_string(n) + "| (" + label + ")", mirig[n],
            "size of the free mirig",
            [n, strategy] { return str(count_free_mirig(n, strategy)); });
      }
    }

    add("expansion components over M_1", "13", "thicket expansion graph",
        [] { return std::to_string(thicket_components(1).component_count()); });
    if (full) {
      add("expansion components over M_2", "284", "thicket expansion graph",
          [] { return std::to_string(thicket_components(2).component_count()); });
    }

    add("(a+b)*(a+b) = a+b in R_2", "true", "multiplicative idempotence", [] {
      return yes_no(eval(parse_expression("(a+b)*(a+b)"), 2) == eval(parse_expression("a+b"), 2));
    });
    add("1+1+1+1 = 1+1 in R_0", "true", "characteristic (2,2)", [] {
      return yes_no(eval(parse_expression("1+1+1+1"), 0) == eval(parse_expression("1+1"), 0));
    });
    add("ab = ba in R_2", "false", "noncommutativity of the free mirig", [] {
      return yes_no(eval(parse_expression("a*b"), 2) == eval(parse_expression("b*a"), 2));
    });
    add("mirig on M_2 + {0,2}: size", "9", "mirig from an idempotent monoid",
        [] { return std::to_string(campion_mirig(free_idempotent_monoid(2)).size()); });
    add("mirig on M_2 + {0,2}: commutative", "false", "mirig from an idempotent monoid", [] {
      auto const report = verify_rig_axioms(campion_mirig(free_idempotent_monoid(2)), true);
      return report.ok() ? yes_no(report.commutative) : "axioms fail";
    });

    add("bounds for n = 1", "16 13", "upper bounds for |R_n|", [] {
      auto const b = mirig_upper_bounds(1);
      return str(b.crude) + " " + str(b.refined);
    });
    add("bounds for n = 2", "16384 6283", "upper bounds for |R_n|", [] {
      auto const b = mirig_upper_bounds(2);
      return str(b.crude) + " " + str(b.refined);
    });

    std::vector<std::pair<Variant, std::vector<std::string>>> const variants{
        {Variant::c11, {"2", "4", "42", "18030"}},
        {Variant::c21, {"3", "7", "80", "40601"}},
        {Variant::c12, {"3", "9", "189", "160389"}},
        {Variant::c02, {"2", "4", "16", "256"}},
        {Variant::boolean_semiring, {"3", "7", "35", "775"}},
    };
    for (auto const& [v, values] : variants) {
      for (int n = 0; n <= (full ? 3 : 2); ++n) {
        add("variant " + to_string(v) + " at n = " + std::to_string(n), values[n],
            v == Variant::boolean_semiring ? "size of the free Boolean semiring"
                                           : "size of the free mirig of characteristic "
                                                 + to_string(v),
            [n, v = v] { return str(count_characteristic_variant(n, v)); });
      }
    }
    return out;
  }

}  // namespace mirig_cli
