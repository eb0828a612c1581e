#include "platknot/platknot.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "json.hpp"
#include "platknot/error.hpp"
#include "platknot/kauffman.hpp"
#include "platknot/rational.hpp"
#include "platknot/transfer.hpp"
#include "platknot/verify.hpp"

struct pk_poly {
  platknot::Poly2 value;
};

struct pk_bracket {
  platknot::BracketPoly value;
};

struct pk_knot {
  std::optional<platknot::Word> word;
  const platknot::KnotTableEntry* entry = nullptr;  // set for table lookups
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_offset = -1;

pk_status record(pk_status status, const char* what, long offset = -1) {
  g_last_error = what;
  g_last_offset = offset;
  return status;
}

// Runs `body`, translating library exceptions into status codes.
template <typename F>
pk_status guarded(F&& body) {
  try {
    body();
    return PK_OK;
  } catch (const platknot::ParseError& e) {
    return record(PK_ERR_PARSE, e.what(), static_cast<long>(e.offset()));
  } catch (const platknot::NotAKnotError& e) {
    return record(PK_ERR_NOT_A_KNOT, e.what());
  } catch (const platknot::UnknownKnotError& e) {
    return record(PK_ERR_UNKNOWN_KNOT, e.what());
  } catch (const platknot::BudgetExceededError& e) {
    return record(PK_ERR_BUDGET_EXCEEDED, e.what());
  } catch (const platknot::InvalidArgumentError& e) {
    return record(PK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return record(PK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(PK_ERR_INTERNAL, e.what());
  }
}

pk_status null_argument() { return record(PK_ERR_INVALID_ARGUMENT, "null argument"); }

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

platknot::Format to_format(pk_format f) {
  switch (f) {
    case PK_FORMAT_LATEX: return platknot::Format::kLatex;
    case PK_FORMAT_JSON: return platknot::Format::kJson;
    default: return platknot::Format::kPlain;
  }
}

const platknot::Word& prime_word(const pk_knot* k) {
  if (!k->word) {
    throw platknot::InvalidArgumentError("'" + k->entry->name +
                                         "' is a connected sum and has no plat word");
  }
  return *k->word;
}

pk_status report_json(const std::vector<platknot::CheckResult>& results, char** report,
                      size_t* failures) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    arr.push_back({{"id", r.id},
                   {"status", std::string(platknot::to_string(r.status))},
                   {"detail", r.detail}});
  }
  *report = dup_string(arr.dump());
  *failures = platknot::count_failures(results);
  return PK_OK;
}

}  // namespace

extern "C" {

const char* pk_version(void) { return "0.1.0"; }

const char* pk_status_name(pk_status status) {
  switch (status) {
    case PK_OK: return "ok";
    case PK_ERR_INTERNAL: return "internal error";
    case PK_ERR_PARSE: return "parse error";
    case PK_ERR_NOT_A_KNOT: return "not a knot";
    case PK_ERR_UNKNOWN_KNOT: return "unknown knot";
    case PK_ERR_METHOD_MISMATCH: return "method mismatch";
    case PK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PK_ERR_BUDGET_EXCEEDED: return "budget exceeded";
  }
  return "unknown status";
}

const char* pk_last_error(void) { return g_last_error.c_str(); }
long pk_last_error_offset(void) { return g_last_offset; }
void pk_string_free(char* s) { delete[] s; }

// ---- polynomials ----

pk_status pk_poly_parse(const char* text, pk_poly** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new pk_poly{platknot::parse_poly2(text)}; });
}

pk_status pk_poly_from_json(const char* json, pk_poly** out) {
  if (!json || !out) return null_argument();
  return guarded([&] { *out = new pk_poly{platknot::poly2_from_json(json)}; });
}

pk_status pk_poly_format(const pk_poly* p, pk_format format, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { *out = dup_string(platknot::format(p->value, to_format(format))); });
}

int pk_poly_equal(const pk_poly* p, const pk_poly* q) {
  return p && q && p->value == q->value ? 1 : 0;
}

pk_status pk_poly_mirror(const pk_poly* p, pk_poly** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { *out = new pk_poly{platknot::mirror(p->value)}; });
}

pk_status pk_poly_specialize(const pk_poly* p, pk_bracket** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { *out = new pk_bracket{platknot::specialize_to_A(p->value)}; });
}

void pk_poly_free(pk_poly* p) { delete p; }

pk_status pk_bracket_parse(const char* text, pk_bracket** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new pk_bracket{platknot::parse_bracket(text)}; });
}

pk_status pk_bracket_from_json(const char* json, pk_bracket** out) {
  if (!json || !out) return null_argument();
  return guarded([&] { *out = new pk_bracket{platknot::bracket_from_json(json)}; });
}

pk_status pk_bracket_format(const pk_bracket* p, pk_format format, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { *out = dup_string(platknot::format(p->value, to_format(format))); });
}

int pk_bracket_equal(const pk_bracket* p, const pk_bracket* q) {
  return p && q && p->value == q->value ? 1 : 0;
}

void pk_bracket_free(pk_bracket* p) { delete p; }

// ---- knots ----

pk_status pk_knot_from_word(const char* word, pk_knot** out) {
  if (!word || !out) return null_argument();
  return guarded([&] {
    auto w = platknot::parse_word(word);
    if (!platknot::is_knot(w)) {
      throw platknot::NotAKnotError("plat closure of '" + platknot::format_word(w) + "' has " +
                                    std::to_string(platknot::component_count(w)) + " components");
    }
    *out = new pk_knot{std::move(w), nullptr};
  });
}

pk_status pk_knot_from_cf(const char* cf, pk_knot** out) {
  if (!cf || !out) return null_argument();
  return guarded([&] {
    auto w = platknot::cf_to_word(platknot::parse_continued_fraction(cf));
    if (!platknot::is_knot(w)) {
      throw platknot::NotAKnotError("continued fraction " + std::string(cf) +
                                    " gives a two-component link");
    }
    *out = new pk_knot{std::move(w), nullptr};
  });
}

pk_status pk_knot_from_name(const char* name, pk_knot** out) {
  if (!name || !out) return null_argument();
  return guarded([&] {
    const auto& e = platknot::lookup(name);
    *out = new pk_knot{e.word, &e};
  });
}

void pk_knot_free(pk_knot* k) { delete k; }

pk_status pk_knot_word(const pk_knot* k, char** out) {
  if (!k || !out) return null_argument();
  return guarded([&] { *out = dup_string(k->word ? platknot::format_word(*k->word) : ""); });
}

int pk_knot_is_composite(const pk_knot* k) { return k && !k->word ? 1 : 0; }

size_t pk_knot_crossings(const pk_knot* k) {
  if (!k) return 0;
  return k->word ? k->word->letter_count() : k->entry->crossing_count();
}

pk_status pk_knot_homfly(const pk_knot* k, pk_poly** out) {
  if (!k || !out) return null_argument();
  return guarded([&] {
    *out = new pk_poly{k->word ? platknot::homfly(*k->word).polynomial
                               : platknot::entry_homfly(*k->entry)};
  });
}

pk_status pk_knot_fgh(const pk_knot* k, pk_poly** f, pk_poly** g, pk_poly** h) {
  if (!k || !f || !g || !h) return null_argument();
  return guarded([&] {
    const auto result = platknot::homfly(prime_word(k));
    auto pf = std::make_unique<pk_poly>(pk_poly{result.tangle.f});
    auto pg = std::make_unique<pk_poly>(pk_poly{result.tangle.g});
    auto ph = std::make_unique<pk_poly>(pk_poly{result.tangle.h});
    *f = pf.release();
    *g = pg.release();
    *h = ph.release();
  });
}

pk_status pk_knot_kseq(const pk_knot* k, int* values, size_t capacity, size_t* count) {
  if (!k || !count || (!values && capacity > 0)) return null_argument();
  return guarded([&] {
    const auto ks = platknot::k_sequence(prime_word(k));
    *count = ks.values.size();
    for (size_t i = 0; i < ks.values.size() && i < capacity; ++i) values[i] = ks.values[i];
  });
}

pk_status pk_knot_certified(const pk_knot* k, int* out) {
  if (!k || !out) return null_argument();
  return guarded([&] { *out = platknot::homfly(prime_word(k)).certified ? 1 : 0; });
}

pk_status pk_knot_jones(const pk_knot* k, pk_jones_method method, pk_bracket** out) {
  if (!k || !out) return null_argument();
  return guarded([&] {
    platknot::BracketPoly x;
    if (method == PK_JONES_SPECIALIZE) {
      x = platknot::specialize_to_A(k->word ? platknot::homfly(*k->word).polynomial
                                            : platknot::entry_homfly(*k->entry));
    } else {
      x = k->word ? platknot::kauffman_x(*k->word) : platknot::entry_kauffman_x(*k->entry);
    }
    *out = new pk_bracket{std::move(x)};
  });
}

// ---- fixtures ----

pk_status pk_table_json(char** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = dup_string(platknot::table_json()); });
}

pk_status pk_table_entry_json(const char* name, char** out) {
  if (!name || !out) return null_argument();
  return guarded([&] { *out = dup_string(platknot::entry_json(platknot::lookup(name))); });
}

// ---- self-checks ----

pk_status pk_verify_all(unsigned iterations, uint64_t seed, char** report, size_t* failures) {
  if (!report || !failures) return null_argument();
  return guarded([&] {
    report_json(platknot::verify_all({iterations, seed}), report, failures);
  });
}

pk_status pk_verify_knot(const char* name, char** report, size_t* failures) {
  if (!name || !report || !failures) return null_argument();
  return guarded([&] { report_json(platknot::verify_knot(name), report, failures); });
}

pk_status pk_verify_property(const char* property, unsigned iterations, uint64_t seed,
                             char** report, size_t* failures) {
  if (!property || !report || !failures) return null_argument();
  return guarded([&] {
    report_json(platknot::verify_property(property, {iterations, seed}), report, failures);
  });
}

uint64_t pk_default_seed(void) { return platknot::kDefaultSeed; }

}  // extern "C"
