// Command-line front end. Exit status: 0 success, 1 usage or input error,
// 2 a verification reported a failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcaff/braid.hpp"
#include "fcaff/coxeter.hpp"
#include "fcaff/error.hpp"
#include "fcaff/fullcomm.hpp"
#include "fcaff/normal_form.hpp"
#include "fcaff/temperley_lieb.hpp"
#include "fcaff/towers.hpp"

namespace {

using nlohmann::json;
using namespace fcaff;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct Options {
  bool json_out = false;
  unsigned jobs = 1;
  int n = 0;
  std::string word;
  std::string word2;
  std::string emit;
  std::size_t max_len = 0;
  bool normal_forms = false;
  std::string which;
  std::string level;
  int j = 0;
  int k = 0;
  std::size_t bound = 0;
  std::string at;
};

void print(const json& j) { std::cout << j.dump() << '\n'; }

bool looks_like_json(const std::string& s) {
  auto const pos = s.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && s[pos] == '{';
}

// Inline JSON, or the contents of a file.
json load_json(const std::string& arg) {
  std::string text = arg;
  if (!looks_like_json(arg)) {
    std::ifstream in(arg);
    if (!in) {
      throw Error("cannot open '" + arg + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

int cmd_reduce(const Options& o) {
  Word const r = reduce(parse_word(o.n, o.word));
  if (o.json_out) {
    print({{"reduced", format_word(r)}, {"length", r.size()}});
  } else {
    std::cout << format_word(r) << '\n';
  }
  return kOk;
}

int cmd_is_fc(const Options& o) {
  Word const r = reduce(parse_word(o.n, o.word));
  std::optional<BraidWitness> const witness =
      o.n == 1 ? std::nullopt : find_braid_factor(r);
  if (o.json_out) {
    json j{{"fully_commutative", !witness}};
    if (witness) {
      j["witness"] = {{"word", format_word(witness->member)},
                      {"position", witness->position}};
    }
    print(j);
  } else if (witness) {
    std::cout << "false\nwitness: " << format_word(witness->member)
              << " (braid factor at letter " << witness->position << ")\n";
  } else {
    std::cout << "true\n";
  }
  return kOk;
}

int cmd_nf(const Options& o) {
  if (!o.emit.empty()) {
    NormalForm const nf = normal_form_from_json(load_json(o.emit));
    auto const violations = validate_normal_form(nf);
    if (!violations.empty()) {
      std::cerr << "invalid normal form:";
      for (const auto& v : violations) {
        std::cerr << " [" << v << "]";
      }
      std::cerr << '\n';
      return kUsage;
    }
    Word const w = emit_normal_form(nf);
    if (o.json_out) {
      print({{"word", format_word(w)}, {"length", w.size()}});
    } else {
      std::cout << format_word(w) << '\n';
    }
    return kOk;
  }
  print(to_json(parse_normal_form(parse_word(o.n, o.word))));
  return kOk;
}

int cmd_enumerate(const Options& o) {
  auto const elements = enumerate_fc(o.n, o.max_len, o.jobs);
  if (!o.normal_forms) {
    for (const auto& e : elements) {
      print({{"n", o.n},
             {"len", e.length()},
             {"word", format_word(e.word)},
             {"affine_length", e.affine_length}});
    }
    return kOk;
  }
  auto const forms = enumerate_normal_forms(o.n, o.max_len);
  for (const auto& nf : forms) {
    print(to_json(nf));
  }
  if (forms.size() != elements.size()) {
    std::cerr << "count mismatch: " << forms.size() << " normal forms, "
              << elements.size() << " FC elements\n";
    return kFailed;
  }
  return kOk;
}

int cmd_inject(const Options& o) {
  check_rank(o.n, 3);
  NormalForm const src =
      looks_like_json(o.word)
          ? normal_form_from_json(load_json(o.word))
          : parse_normal_form(parse_word(o.n - 1, o.word));
  if (src.n != o.n - 1) {
    throw Error("source normal form has rank " + std::to_string(src.n)
                + ", expected " + std::to_string(o.n - 1));
  }
  NormalForm const out = o.which == "I" ? inject_I(src) : inject_J(src);
  if (o.json_out) {
    print({{"normal_form", to_json(out)},
           {"word", format_word(emit_normal_form(out))}});
  } else {
    print(to_json(out));
  }
  return kOk;
}

int cmd_braid_eq(const Options& o) {
  bool const eq = braid_equal(parse_braid_word(o.n, o.word),
                              parse_braid_word(o.n, o.word2));
  if (o.json_out) {
    print({{"equal", eq}});
  } else {
    std::cout << (eq ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_lemma31(const Options& o) {
  auto const sides = lemma31_sides(o.n, o.j, o.k);
  bool const holds = verify_lemma31(o.n, o.j, o.k);
  json j{{"n", o.n},
         {"j", o.j},
         {"k", o.k},
         {"case", std::string(1, sides.case_label)},
         {"u", format_braid_word(sides.u)},
         {"t", sides.t},
         {"v", format_word(sides.v)},
         {"holds", holds}};
  if (o.json_out) {
    print(j);
  } else {
    auto or_one = [](std::string s) { return s.empty() ? "1" : s; };
    std::cout << "y^" << o.k << " = R(" << or_one(format_braid_word(sides.u))
              << ") c^" << sides.t << " (" << or_one(format_word(sides.v))
              << "): "
              << (holds ? "holds" : "FAILS") << '\n';
  }
  return holds ? kOk : kFailed;
}

int cmd_decompose(const Options& o) {
  Word const w = parse_word(o.n, o.word);
  if (o.level == "coxeter") {
    auto const dec = corollary_decompose(w);
    bool const ok = assemble(o.n, dec) == to_permutation(w);
    json j = to_json(dec);
    j["verified"] = ok;
    print(j);
    return ok ? kOk : kFailed;
  }
  auto const dec = decompose_fc_braid(w);
  json j = to_json(dec);
  j["verified"] = true;
  print(j);
  return kOk;
}

int cmd_tl_mul(const Options& o) {
  TLElement const x = tl_from_json(load_json(o.word));
  TLElement const y = tl_from_json(load_json(o.word2));
  if (x.n != o.n || y.n != o.n) {
    throw Error("elements do not have rank " + std::to_string(o.n));
  }
  TLElement const z = tl_mul(x, y);
  if (o.json_out) {
    print(to_json(z));
  } else {
    print(to_json(z));
    std::cerr << format_element(z) << '\n';
  }
  return kOk;
}

int cmd_tower_rank(const Options& o) {
  std::vector<Rational> points;
  std::stringstream ss(o.at);
  for (std::string item; std::getline(ss, item, ',');) {
    points.push_back(parse_rational(item));
    if (points.back() == 0) {
      throw Error("evaluation point q0 = 0 is not allowed");
    }
  }
  if (points.empty()) {
    throw Error("--at needs at least one evaluation point");
  }
  auto const report = check_theoremF_rank(o.n, o.bound, points, o.jobs);
  bool const ok = report.full_rank() && report.leading_keys_distinct;
  if (o.json_out) {
    print(report.to_json());
  } else {
    std::cout << "family size " << report.family_size << ", basis keys "
              << report.basis_keys << '\n';
    for (const auto& [q0, rank] : report.ranks) {
      std::cout << "  q0 = " << format_rational(q0) << ": rank " << rank
                << (rank == report.family_size ? " (full)" : " (deficient)")
                << '\n';
    }
    std::cout << "leading keys distinct: "
              << (report.leading_keys_distinct ? "yes" : "no") << '\n';
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully commutative elements of affine Ã_n and their algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable output");
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration")
      ->check(CLI::Range(1u, 256u));

  std::function<int(const Options&)> action;
  auto rank_option = [&](CLI::App* sub, int min = 1) {
    sub->add_option("--n", o.n, "Rank n")->required()->check(
        CLI::Range(min, 64));
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Canonical reduced word");
  rank_option(reduce_cmd);
  reduce_cmd->add_option("word", o.word, "Word, e.g. \"s1 s2 a\"")->required();
  reduce_cmd->callback([&] { action = cmd_reduce; });

  auto* fc_cmd = app.add_subcommand("is-fc", "Full commutativity test");
  rank_option(fc_cmd);
  fc_cmd->add_option("word", o.word)->required();
  fc_cmd->callback([&] { action = cmd_is_fc; });

  auto* nf_cmd = app.add_subcommand("nf", "Normal form of a word, or --emit");
  nf_cmd->add_option("--n", o.n, "Rank n")->check(CLI::Range(2, 64));
  auto* nf_word = nf_cmd->add_option("word", o.word);
  auto* nf_emit = nf_cmd->add_option("--emit", o.emit,
                                     "Normal-form JSON (inline or file)");
  nf_word->excludes(nf_emit);
  nf_cmd->callback([&] {
    if (o.emit.empty() && (o.word.empty() || o.n == 0)) {
      throw CLI::ValidationError("nf", "needs --n and a word, or --emit");
    }
    action = cmd_nf;
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "List FC elements");
  rank_option(enum_cmd);
  enum_cmd->add_option("--max-len", o.max_len)->required();
  enum_cmd->add_flag("--normal-forms", o.normal_forms,
                     "List normal forms and cross-check the count");
  enum_cmd->callback([&] {
    if (o.normal_forms && o.n < 2) {
      throw CLI::ValidationError("--normal-forms", "needs n >= 2");
    }
    action = cmd_enumerate;
  });

  auto* inject_cmd = app.add_subcommand(
      "inject", "I or J from rank n-1 (word or normal-form JSON) to rank n");
  rank_option(inject_cmd, 3);
  inject_cmd->add_option("--which", o.which)
      ->required()
      ->check(CLI::IsMember({"I", "J"}));
  inject_cmd->add_option("input", o.word)->required();
  inject_cmd->callback([&] { action = cmd_inject; });

  auto* beq_cmd = app.add_subcommand(
      "braid-eq", "Equality in B(Ã_n); prefix a letter with ! to invert it");
  rank_option(beq_cmd);
  beq_cmd->add_option("w1", o.word)->required();
  beq_cmd->add_option("w2", o.word2)->required();
  beq_cmd->callback([&] { action = cmd_braid_eq; });

  auto* l31_cmd = app.add_subcommand("lemma31", "Check y^k = u c^t v");
  rank_option(l31_cmd, 2);
  l31_cmd->add_option("--j", o.j)->required();
  l31_cmd->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  l31_cmd->callback([&] { action = cmd_lemma31; });

  auto* dec_cmd = app.add_subcommand("decompose", "Coset or braid decomposition");
  rank_option(dec_cmd, 2);
  dec_cmd->add_option("--level", o.level)
      ->required()
      ->check(CLI::IsMember({"coxeter", "braid"}));
  dec_cmd->add_option("word", o.word)->required();
  dec_cmd->callback([&] { action = cmd_decompose; });

  auto* tl_cmd = app.add_subcommand("tl-mul", "Product of two TL elements");
  rank_option(tl_cmd);
  tl_cmd->add_option("x", o.word, "JSON file or inline JSON")->required();
  tl_cmd->add_option("y", o.word2, "JSON file or inline JSON")->required();
  tl_cmd->callback([&] { action = cmd_tl_mul; });

  auto* rank_cmd = app.add_subcommand("tower-rank",
                                      "Rank of the tower image family");
  rank_option(rank_cmd, 2);
  rank_cmd->add_option("--bound", o.bound)->required();
  rank_cmd->add_option("--at", o.at, "Comma-separated rationals")->required();
  rank_cmd->callback([&] { action = cmd_tower_rank; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return action(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
