// platknot command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "platknot/platknot.h"

namespace {

using json = nlohmann::ordered_json;

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // usage errors, failed checks, internal errors
constexpr int kExitParse = 2;
constexpr int kExitNotKnot = 3;
constexpr int kExitUnknownKnot = 4;
constexpr int kExitMismatch = 5;
constexpr int kExitBudget = 6;

struct ApiError {
  pk_status status;
  std::string message;
};

int exit_code(pk_status s) {
  switch (s) {
    case PK_OK: return kExitOk;
    case PK_ERR_PARSE:
    case PK_ERR_INVALID_ARGUMENT: return kExitParse;
    case PK_ERR_NOT_A_KNOT: return kExitNotKnot;
    case PK_ERR_UNKNOWN_KNOT: return kExitUnknownKnot;
    case PK_ERR_METHOD_MISMATCH: return kExitMismatch;
    case PK_ERR_BUDGET_EXCEEDED: return kExitBudget;
    default: return kExitFailure;
  }
}

void check(pk_status s) {
  if (s != PK_OK) throw ApiError{s, pk_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { pk_string_free(s); }
};
struct PolyDeleter {
  void operator()(pk_poly* p) const { pk_poly_free(p); }
};
struct BracketDeleter {
  void operator()(pk_bracket* p) const { pk_bracket_free(p); }
};
struct KnotDeleter {
  void operator()(pk_knot* k) const { pk_knot_free(k); }
};
using Poly = std::unique_ptr<pk_poly, PolyDeleter>;
using Bracket = std::unique_ptr<pk_bracket, BracketDeleter>;
using Knot = std::unique_ptr<pk_knot, KnotDeleter>;

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> guard(s);
  return s ? std::string(s) : std::string();
}

std::string render(const pk_poly* p, pk_format f) {
  char* out = nullptr;
  check(pk_poly_format(p, f, &out));
  return take(out);
}

std::string render(const pk_bracket* p, pk_format f) {
  char* out = nullptr;
  check(pk_bracket_format(p, f, &out));
  return take(out);
}

struct Selector {
  std::string word;
  std::string cf;
  std::string knot;
  CLI::Option* word_opt = nullptr;
  CLI::Option* cf_opt = nullptr;
  CLI::Option* knot_opt = nullptr;

  void attach(CLI::App* app) {
    word_opt = app->add_option("--word", word, "plat word in s1, s2, e.g. \"s1 s2^-1 s1\"");
    cf_opt = app->add_option("--cf", cf, "continued fraction, e.g. 1,3,1")->allow_extra_args(false);
    knot_opt = app->add_option("--knot", knot, "fixture name, e.g. 8_9");
  }

  void validate() const {
    const int given = static_cast<int>(word_opt->count() > 0) +
                      static_cast<int>(cf_opt->count() > 0) +
                      static_cast<int>(knot_opt->count() > 0);
    if (given != 1) throw CLI::ValidationError("exactly one of --word, --cf, --knot is required");
  }

  Knot build() const {
    pk_knot* k = nullptr;
    if (word_opt->count() > 0) {
      check(pk_knot_from_word(word.c_str(), &k));
    } else if (cf_opt->count() > 0) {
      check(pk_knot_from_cf(cf.c_str(), &k));
    } else {
      check(pk_knot_from_name(knot.c_str(), &k));
    }
    return Knot(k);
  }

  // {"word": "..."} / {"cf": "..."} / {"knot": "..."}
  json echo() const {
    if (word_opt->count() > 0) return {{"word", word}};
    if (cf_opt->count() > 0) return {{"cf", cf}};
    return {{"knot", knot}};
  }

  std::string echo_line() const {
    if (word_opt->count() > 0) return "word: " + word;
    if (cf_opt->count() > 0) return "cf: " + cf;
    return "knot: " + knot;
  }
};

struct FormatOption {
  std::string name = "plain";
  bool latex = false;
  bool json_flag = false;

  void attach(CLI::App* app) {
    app->add_option("--format", name, "output format")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    app->add_flag("--latex", latex, "same as --format latex");
    app->add_flag("--json", json_flag, "same as --format json");
  }

  pk_format value() const {
    if (json_flag || name == "json") return PK_FORMAT_JSON;
    if (latex || name == "latex") return PK_FORMAT_LATEX;
    return PK_FORMAT_PLAIN;
  }
};

json poly_json(const pk_poly* p) { return json::parse(render(p, PK_FORMAT_JSON)); }
json bracket_json(const pk_bracket* p) { return json::parse(render(p, PK_FORMAT_JSON)); }

std::string knot_word(const pk_knot* k) {
  char* out = nullptr;
  check(pk_knot_word(k, &out));
  return take(out);
}

std::vector<int> knot_kseq(const pk_knot* k) {
  std::size_t count = 0;
  check(pk_knot_kseq(k, nullptr, 0, &count));
  std::vector<int> ks(count);
  check(pk_knot_kseq(k, ks.data(), ks.size(), &count));
  return ks;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

int cmd_homfly(const Selector& sel, const FormatOption& fmt) {
  const Knot k = sel.build();
  pk_poly* raw = nullptr;
  check(pk_knot_homfly(k.get(), &raw));
  const Poly p(raw);
  const pk_format f = fmt.value();
  const bool composite = pk_knot_is_composite(k.get()) != 0;

  std::vector<int> ks;
  Poly pf, pg, ph;
  int certified = 0;
  if (!composite) {
    ks = knot_kseq(k.get());
    pk_poly *rf = nullptr, *rg = nullptr, *rh = nullptr;
    check(pk_knot_fgh(k.get(), &rf, &rg, &rh));
    pf.reset(rf);
    pg.reset(rg);
    ph.reset(rh);
    check(pk_knot_certified(k.get(), &certified));
  }

  if (f == PK_FORMAT_JSON) {
    json out;
    out["input"] = sel.echo();
    if (!composite) {
      out["word"] = knot_word(k.get());
      out["k_sequence"] = ks;
      out["fgh"] = {{"f", poly_json(pf.get())}, {"g", poly_json(pg.get())}, {"h", poly_json(ph.get())}};
    }
    out["homfly"] = poly_json(p.get());
    if (!composite) out["certified"] = certified != 0;
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << sel.echo_line() << '\n';
  if (!composite) {
    std::cout << "canonical word: " << knot_word(k.get()) << '\n'
              << "k-sequence: " << join(ks) << '\n'
              << "f: " << render(pf.get(), f) << '\n'
              << "g: " << render(pg.get(), f) << '\n'
              << "h: " << render(ph.get(), f) << '\n';
  }
  std::cout << "P: " << render(p.get(), f) << '\n';
  if (!composite) std::cout << (certified ? "certified" : "uncertified (word is not alternating standard)") << '\n';
  return kExitOk;
}

int cmd_jones(const Selector& sel, const FormatOption& fmt, const std::string& method) {
  const Knot k = sel.build();
  const pk_format f = fmt.value();

  auto compute = [&](pk_jones_method m) {
    pk_bracket* raw = nullptr;
    check(pk_knot_jones(k.get(), m, &raw));
    return Bracket(raw);
  };

  if (!method.empty()) {
    const Bracket x = compute(method == "bracket" ? PK_JONES_BRACKET : PK_JONES_SPECIALIZE);
    if (f == PK_FORMAT_JSON) {
      json out;
      out["input"] = sel.echo();
      out["method"] = method;
      out["jones"] = bracket_json(x.get());
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << sel.echo_line() << '\n' << "X: " << render(x.get(), f) << '\n';
    }
    return kExitOk;
  }

  const Bracket bx = compute(PK_JONES_BRACKET);
  const Bracket sx = compute(PK_JONES_SPECIALIZE);
  const bool agree = pk_bracket_equal(bx.get(), sx.get()) != 0;
  if (f == PK_FORMAT_JSON) {
    json out;
    out["input"] = sel.echo();
    out["jones"] = bracket_json(bx.get());
    if (!agree) out["specialized"] = bracket_json(sx.get());
    out["agree"] = agree;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << sel.echo_line() << '\n' << "X: " << render(bx.get(), f) << '\n';
    if (agree) {
      std::cout << "bracket and specialized HOMFLY agree\n";
    } else {
      std::cout << "specialized HOMFLY: " << render(sx.get(), f) << '\n'
                << "bracket and specialized HOMFLY DISAGREE\n";
    }
  }
  if (!agree) {
    std::cerr << "platknot: the two Jones computations disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_verify(const std::optional<std::string>& knot, const std::optional<std::string>& property,
               unsigned iterations, std::uint64_t seed, const FormatOption& fmt) {
  char* raw = nullptr;
  std::size_t failures = 0;
  if (knot) {
    check(pk_verify_knot(knot->c_str(), &raw, &failures));
  } else if (property) {
    check(pk_verify_property(property->c_str(), iterations, seed, &raw, &failures));
  } else {
    check(pk_verify_all(iterations, seed, &raw, &failures));
  }
  const json report = json::parse(take(raw));
  if (fmt.value() == PK_FORMAT_JSON) {
    json out;
    out["checks"] = report;
    out["failures"] = failures;
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& r : report) {
      std::cout << r["status"].get<std::string>() << "  " << r["id"].get<std::string>();
      const auto detail = r["detail"].get<std::string>();
      if (!detail.empty()) std::cout << "  " << detail;
      std::cout << '\n';
    }
    std::cout << report.size() << " checks, " << failures << " failed\n";
  }
  return failures == 0 ? kExitOk : kExitFailure;
}

std::string entry_word(const json& e) {
  if (e["word"].is_string()) return e["word"].get<std::string>();
  std::string out;
  for (const auto& s : e["summands"]) out += (out.empty() ? "" : " # ") + s.get<std::string>();
  return out;
}

int cmd_table(const std::optional<std::string>& name, const FormatOption& fmt) {
  char* raw = nullptr;
  if (name) {
    check(pk_table_entry_json(name->c_str(), &raw));
  } else {
    check(pk_table_json(&raw));
  }
  const std::string text = take(raw);
  if (fmt.value() == PK_FORMAT_JSON) {
    std::cout << (name ? json::parse(text).dump(2) : text) << '\n';
    return kExitOk;
  }

  const json doc = json::parse(text);
  if (name) {
    std::cout << "name: " << doc["name"].get<std::string>() << '\n'
              << "word: " << entry_word(doc) << '\n'
              << "crossings: " << doc["crossings"].get<std::size_t>() << '\n';
    if (doc.contains("continued_fraction")) {
      std::string cf;
      for (const auto& x : doc["continued_fraction"]) {
        cf += (cf.empty() ? "" : ",") + std::to_string(x.get<int>());
      }
      std::cout << "continued fraction: " << cf << '\n';
    }
    if (doc.contains("k_sequence")) {
      std::cout << "k-sequence: " << join(doc["k_sequence"].get<std::vector<int>>()) << '\n';
    }
    pk_poly* p = nullptr;
    check(pk_poly_from_json(doc["homfly"].dump().c_str(), &p));
    const Poly homfly(p);
    std::cout << "P: " << render(homfly.get(), fmt.value()) << '\n'
              << "provenance: " << doc["provenance"].get<std::string>() << '\n';
    if (!doc["notes"].get<std::string>().empty()) {
      std::cout << "notes: " << doc["notes"].get<std::string>() << '\n';
    }
    return kExitOk;
  }

  for (const auto& [entry_name, e] : doc.items()) {
    std::cout << entry_name << "  " << e["crossings"].get<std::size_t>() << "  " << entry_word(e)
              << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact HOMFLY and Jones values of 2-bridge knots given as 4-plats"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pk_version()));

  Selector homfly_sel;
  FormatOption homfly_fmt;
  auto* homfly = app.add_subcommand("homfly", "HOMFLY polynomial via transfer matrices");
  homfly_sel.attach(homfly);
  homfly_fmt.attach(homfly);

  Selector jones_sel;
  FormatOption jones_fmt;
  std::string method;
  auto* jones = app.add_subcommand("jones", "normalized Kauffman bracket X(A)");
  jones_sel.attach(jones);
  jones_fmt.attach(jones);
  jones->add_option("--method", method, "bracket or specialize (default: both, compared)")
      ->check(CLI::IsMember({"bracket", "specialize"}));

  std::optional<std::string> verify_knot;
  std::optional<std::string> verify_property;
  unsigned iterations = 100;
  std::uint64_t seed = pk_default_seed();
  FormatOption verify_fmt;
  auto* verify = app.add_subcommand("verify", "run the self-check suite");
  verify->add_flag("--all", "run every check (default)");
  auto* vk = verify->add_option("--knot", verify_knot, "checks for one fixture");
  auto* vp = verify->add_option("--property", verify_property, "one randomized property")
                 ->check(CLI::IsMember({"cancel-pair", "perm-trace", "bracket-cancel", "parity"}));
  vk->excludes(vp);
  verify->add_option("--iterations", iterations, "random cases per property")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");
  verify_fmt.attach(verify);

  std::optional<std::string> table_name;
  FormatOption table_fmt;
  auto* table = app.add_subcommand("table", "list the built-in fixtures");
  table->add_option("--name", table_name, "show one entry");
  table_fmt.attach(table);

  try {
    app.parse(argc, argv);
    if (homfly->parsed()) homfly_sel.validate();
    if (jones->parsed()) jones_sel.validate();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (homfly->parsed()) return cmd_homfly(homfly_sel, homfly_fmt);
    if (jones->parsed()) return cmd_jones(jones_sel, jones_fmt, method);
    if (verify->parsed()) return cmd_verify(verify_knot, verify_property, iterations, seed, verify_fmt);
    if (table->parsed()) return cmd_table(table_name, table_fmt);
  } catch (const ApiError& e) {
    std::cerr << "platknot: " << e.message << '\n';
    return exit_code(e.status);
  } catch (const std::exception& e) {
    std::cerr << "platknot: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
