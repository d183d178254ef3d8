#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "mirig/counting.hpp"
#include "mirig/error.hpp"
#include "mirig/expression.hpp"
#include "mirig/json_io.hpp"
#include "mirig/rig_table.hpp"
#include "mirig/subsemigroup.hpp"
#include "mirig/tree.hpp"
#include "verify.hpp"

using namespace mirig;

namespace {

  enum class Format { text, json };

  struct Options {
    Format      format = Format::text;
    int         n      = -1;
    std::string first;
    std::string second;
    std::string strategy = "grouped";
    std::string variant;
    std::string monoid;
    std::string suite = "quick";
    bool        json  = false;
  };

  std::string read_stdin() {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
      text.pop_back();
    }
    return text;
  }

  // "-" reads the payload from standard input
  std::string payload(std::string const& arg) {
    return arg == "-" ? read_stdin() : arg;
  }

  void print(Json const& j) {
    std::cout << j.dump() << '\n';
  }

  int generator_count(Options const& o, Expression const& e) {
    return o.n >= 0 ? o.n : max_generator(e) + 1;
  }

  void word_normalize(Options const& o) {
    std::string const text = payload(o.first);
    Tree const        t    = tree_of_word(parse_word(text));
    std::optional<std::string> shortest;
    if (t.height() <= kMaxEnumerableHeight) {
      shortest = to_string(shortest_word(t));
    }
    if (o.format == Format::json) {
      Json j;
      j["word"]     = text;
      j["tree"]     = to_sexpr(t);
      j["shortest"] = shortest ? Json(*shortest) : Json(nullptr);
      print(j);
    } else {
      std::cout << "tree: " << to_sexpr(t) << '\n';
      std::cout << "shortest: " << (shortest ? *shortest : "(not searched above height 4)")
                << '\n';
    }
  }

  void report_equality(Options const& o, bool equal) {
    if (o.format == Format::json) {
      print(Json{{"equal", equal}});
    } else {
      std::cout << (equal ? "equal" : "different") << '\n';
    }
  }

  void word_eq(Options const& o) {
    report_equality(o, words_equivalent(parse_word(payload(o.first)), parse_word(payload(o.second))));
  }

  void print_triple(Options const& o, ComplementaryTriple const& c) {
    if (o.format == Format::json) {
      print(to_json(c));
    } else {
      std::cout << to_string(c) << '\n';
    }
  }

  void eval_command(Options const& o) {
    Expression const e = parse_expression(payload(o.first));
    print_triple(o, eval(e, generator_count(o, e)));
  }

  void eq_command(Options const& o) {
    Expression const e1 = parse_expression(payload(o.first));
    Expression const e2 = parse_expression(payload(o.second));
    int const        n  = o.n >= 0 ? o.n : std::max(max_generator(e1), max_generator(e2)) + 1;
    report_equality(o, eval(e1, n) == eval(e2, n));
  }

  void print_count(Options const& o, std::string const& what, BigInt const& k) {
    if (o.format == Format::json) {
      Json j;
      j["count"] = what;
      j["n"]     = o.n;
      j["value"] = k.str();
      print(j);
    } else {
      std::cout << k << '\n';
    }
  }

  CountStrategy parse_strategy(std::string const& s) {
    if (s == "triples") {
      return CountStrategy::triples;
    }
    if (s == "grouped") {
      return CountStrategy::grouped;
    }
    throw PreconditionError("unknown strategy '" + s + "' (expected triples or grouped)");
  }

  void enumerate_command(Options const& o) {
    auto const all = enumerate_replete(o.n);
    if (o.json || o.format == Format::json) {
      for (auto const& r : all) {
        print(to_json(r));
      }
      return;
    }
    for (auto const& r : all) {
      std::string line;
      for (Alphabet a : r.alphabets().members()) {
        line += a.to_string();
      }
      line += " L=";
      for (auto const& p : r.left_paths()) {
        line += to_string(p);
      }
      line += " R=";
      for (auto const& p : r.right_paths()) {
        line += to_string(p);
      }
      std::cout << line << '\n';
    }
  }

  void bounds_command(Options const& o) {
    auto const b = mirig_upper_bounds(o.n);
    if (o.format == Format::json) {
      print(Json{{"n", o.n}, {"crude", b.crude.str()}, {"refined", b.refined.str()}});
    } else {
      std::cout << "crude: " << b.crude << '\n' << "refined: " << b.refined << '\n';
    }
  }

  FiniteMonoid monoid_from_json(Json const& j) {
    FiniteMonoid m;
    try {
      m.names    = j.at("names").get<std::vector<std::string>>();
      m.mul      = j.at("mul").get<OperationTable>();
      m.identity = j.value("identity", 0);
    } catch (nlohmann::json::exception const& e) {
      throw PreconditionError(std::string("invalid monoid table: ") + e.what());
    }
    return m;
  }

  FiniteMonoid named_monoid(std::string const& spec) {
    if (spec == "trivial" || spec == "M0") {
      return trivial_monoid();
    }
    if (spec.size() == 2 && spec[0] == 'M' && spec[1] >= '1' && spec[1] <= '3') {
      return free_idempotent_monoid(spec[1] - '0');
    }
    std::string text;
    if (spec == "-") {
      text = read_stdin();
    } else {
      std::ifstream in(spec);
      if (!in) {
        throw PreconditionError("no monoid named '" + spec
                                + "' and no such file (expected trivial, M1, M2, M3 or a "
                                  "JSON table)");
      }
      std::ostringstream s;
      s << in.rdbuf();
      text = s.str();
    }
    return monoid_from_json(parse_json(text));
  }

  void campion_command(Options const& o) {
    FiniteRigTable const t      = campion_mirig(named_monoid(o.monoid));
    RigAxiomReport const report = verify_rig_axioms(t, true);
    auto const [m, k]           = characteristic(t);
    if (o.format == Format::json) {
      Json j;
      j["elements"]        = t.names;
      j["add"]             = t.add;
      j["mul"]             = t.mul;
      j["zero"]            = t.zero;
      j["one"]             = t.one;
      j["mirig"]           = report.ok();
      j["commutative"]     = report.commutative;
      j["characteristic"]  = {m, k};
      print(j);
      return;
    }
    auto table = [&](char const* op, OperationTable const& tab) {
      std::cout << op;
      for (auto const& name : t.names) {
        std::cout << ' ' << name;
      }
      std::cout << '\n';
      for (int x = 0; x < t.size(); ++x) {
        std::cout << t.names[x];
        for (int y = 0; y < t.size(); ++y) {
          std::cout << ' ' << t.names[tab[x][y]];
        }
        std::cout << '\n';
      }
    };
    std::cout << "elements: " << t.size() << '\n';
    table("+", t.add);
    table("*", t.mul);
    std::cout << "mirig: " << (report.ok() ? "yes" : "no") << '\n';
    for (auto const& v : report.violations) {
      std::cout << "  violated: " << v.axiom << '\n';
    }
    std::cout << "commutative: " << (report.commutative ? "yes" : "no") << '\n';
    std::cout << "characteristic: (" << m << "," << k << ")\n";
  }

  int verify_command(Options const& o) {
    mirig_cli::Suite suite;
    if (o.suite == "quick") {
      suite = mirig_cli::Suite::quick;
    } else if (o.suite == "full") {
      suite = mirig_cli::Suite::full;
    } else {
      throw PreconditionError("unknown suite '" + o.suite + "' (expected quick or full)");
    }
    int failed = 0;
    for (auto const& c : mirig_cli::checks(suite)) {
      auto const  start = std::chrono::steady_clock::now();
      std::string computed;
      try {
        computed = c.compute();
      } catch (std::exception const& e) {
        computed = std::string("error: ") + e.what();
      }
      double const seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      bool const pass = computed == c.expected;
      failed += pass ? 0 : 1;
      Json j;
      j["check"]     = c.name;
      j["expected"]  = c.expected;
      j["reference"] = c.reference;
      j["computed"]  = computed;
      j["pass"]      = pass;
      j["seconds"]   = std::round(seconds * 1000) / 1000;
      print(j);
    }
    return failed == 0 ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free idempotent monoids, replete subsemigroups and free mirigs"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, Format> const formats{{"text", Format::text}, {"json", Format::json}};
  app.add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto n_option = [&o](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--n", o.n, "Number of generators")->check(CLI::Range(0, 26));
    if (required) {
      opt->required();
    }
  };

  auto* wn = app.add_subcommand("word-normalize", "Tree and shortest word of a word");
  wn->add_option("word", o.first, "Word over a-z, or - for stdin")->required();

  auto* we = app.add_subcommand("word-eq", "Whether two words are equal in the free band");
  we->add_option("first", o.first)->required();
  we->add_option("second", o.second)->required();

  auto* ev = app.add_subcommand("eval", "Complementary triple of a rig expression");
  n_option(ev, false);
  ev->add_option("expression", o.first, "Expression, or - for stdin")->required();

  auto* eq = app.add_subcommand("eq", "Whether two expressions are equal in the free mirig");
  n_option(eq, false);
  eq->add_option("first", o.first)->required();
  eq->add_option("second", o.second)->required();

  auto* count = app.add_subcommand("count", "Exact counts");
  count->require_subcommand(1);
  auto* cm = count->add_subcommand("monoid", "|M_n|");
  n_option(cm, true);
  auto* cr = count->add_subcommand("mirig", "|R_n|, n <= 3");
  n_option(cr, true);
  cr->add_option("--strategy", o.strategy, "triples or grouped");
  auto* cs = count->add_subcommand("replete", "Replete subsemigroups of T_n, n <= 3");
  n_option(cs, true);
  auto* cu = count->add_subcommand("uniform", "Uniform subsemigroups of T_n, n <= 5");
  n_option(cu, true);
  auto* cv = count->add_subcommand("variant", "Free mirigs of other characteristics");
  n_option(cv, true);
  cv->add_option("--variant", o.variant, "1,1 | 2,1 | 1,2 | 0,2 | boolean")->required();

  auto* en = app.add_subcommand("enumerate", "Dump objects");
  en->require_subcommand(1);
  auto* er = en->add_subcommand("replete", "Every replete subsemigroup of T_n, n <= 3");
  n_option(er, true);
  er->add_flag("--json", o.json, "One JSON document per line");

  auto* bo = app.add_subcommand("bounds", "Upper bounds for |R_n|");
  n_option(bo, true);

  auto* ca = app.add_subcommand("campion", "The mirig M + {0, 2} of an idempotent monoid M");
  ca->add_option("--monoid", o.monoid, "trivial, M1, M2, M3, a JSON table file, or -")
      ->required();

  auto* ve = app.add_subcommand("verify", "Recompute the reference values");
  ve->add_option("--suite", o.suite, "quick or full");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (wn->parsed()) {
      word_normalize(o);
    } else if (we->parsed()) {
      word_eq(o);
    } else if (ev->parsed()) {
      eval_command(o);
    } else if (eq->parsed()) {
      eq_command(o);
    } else if (cm->parsed()) {
      print_count(o, "monoid", count_free_monoid(o.n));
    } else if (cr->parsed()) {
      print_count(o, "mirig", count_free_mirig(o.n, parse_strategy(o.strategy)));
    } else if (cs->parsed()) {
      if (o.n > 3) {
        throw CapacityError("replete subsemigroups are enumerated for n <= 3");
      }
      print_count(o, "replete", BigInt(enumerate_replete(o.n).size()));
    } else if (cu->parsed()) {
      print_count(o, "uniform", count_uniform(o.n));
    } else if (cv->parsed()) {
      Variant const v = parse_variant(o.variant);
      print_count(o, "variant " + to_string(v), count_characteristic_variant(o.n, v));
    } else if (er->parsed()) {
      enumerate_command(o);
    } else if (bo->parsed()) {
      bounds_command(o);
    } else if (ca->parsed()) {
      campion_command(o);
    } else if (ve->parsed()) {
      return verify_command(o);
    }
  } catch (mirig::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
