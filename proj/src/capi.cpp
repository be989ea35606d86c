#include "potent.h"

#include <cstring>
#include <new>
#include <string>

#include "potent/characterize.hpp"
#include "potent/report.hpp"
#include "potent/sigma.hpp"
#include "potent/verify.hpp"

struct potent_sequence {
  potent::DegreeSequence impl;
};

struct potent_enum {
  potent::GraphicSequenceStream impl;
};

namespace {

thread_local std::string g_last_error;

potent_status fail(potent_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

potent_status map_error(const potent::Error& e) {
  switch (e.kind()) {
    case potent::ErrorKind::Parse:
      return fail(POTENT_ERROR_PARSE, e.what());
    case potent::ErrorKind::Domain:
      return fail(POTENT_ERROR_DOMAIN, e.what());
    case potent::ErrorKind::Cap:
      return fail(POTENT_ERROR_CAP, e.what());
    case potent::ErrorKind::Invalid:
      return fail(POTENT_ERROR_INVALID, e.what());
  }
  return fail(POTENT_ERROR_INTERNAL, e.what());
}

template <typename Fn>
potent_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const potent::Error& e) {
    return map_error(e);
  } catch (const std::exception& e) {
    return fail(POTENT_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(POTENT_ERROR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

potent::TargetPattern target_from(potent_target target) {
  switch (target) {
    case POTENT_TARGET_K23:
      return potent::TargetPattern::named(potent::TargetTag::K23);
    case POTENT_TARGET_K5P4:
      return potent::TargetPattern::named(potent::TargetTag::K5minusP4);
    case POTENT_TARGET_K33:
      return potent::TargetPattern::named(potent::TargetTag::K33);
    case POTENT_TARGET_K6C6:
      return potent::TargetPattern::named(potent::TargetTag::K6minusC6);
  }
  throw potent::Error(potent::ErrorKind::Invalid, "unknown target id");
}

}  // namespace

extern "C" {

const char* potent_last_error(void) { return g_last_error.c_str(); }

void potent_string_free(char* s) { delete[] s; }

potent_status potent_sequence_parse(const char* text, potent_sequence** out) {
  if (!text || !out) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    *out = new potent_sequence{potent::DegreeSequence::parse(text)};
    return POTENT_OK;
  });
}

potent_status potent_sequence_from_terms(const int* terms, size_t count, potent_sequence** out) {
  if ((!terms && count > 0) || !out) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    *out = new potent_sequence{potent::DegreeSequence(std::vector<int>(terms, terms + count))};
    return POTENT_OK;
  });
}

void potent_sequence_free(potent_sequence* seq) { delete seq; }

potent_status potent_sequence_format(const potent_sequence* seq, char** out) {
  if (!seq || !out) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    *out = copy_string(seq->impl.format());
    return POTENT_OK;
  });
}

int potent_sequence_length(const potent_sequence* seq) { return seq ? seq->impl.n() : -1; }

int potent_sequence_term(const potent_sequence* seq, int k) {
  if (!seq || k < 1 || k > seq->impl.n()) return -1;
  return seq->impl.d(k);
}

potent_status potent_sequence_stats(const potent_sequence* seq, long long* sigma, int* m, int* h, int* n) {
  if (!seq) return fail(POTENT_ERROR_INVALID, "null sequence");
  const potent::SequenceStats stats = potent::sequence_stats(seq->impl);
  if (sigma) *sigma = stats.sigma;
  if (m) *m = stats.m;
  if (h) *h = stats.h;
  if (n) *n = stats.n;
  return POTENT_OK;
}

potent_status potent_sequence_lay_off(const potent_sequence* seq, int k, potent_sequence** out) {
  if (!seq || !out) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&]() -> potent_status {
    auto residual = potent::lay_off(seq->impl, k);
    if (!residual)
      return fail(POTENT_ERROR_LAYOFF, "laying off d_" + std::to_string(k) +
                                           " is not satisfiable; the sequence is not graphic");
    *out = new potent_sequence{std::move(*residual)};
    return POTENT_OK;
  });
}

potent_status potent_is_graphic(const potent_sequence* seq, potent_graphic_method method, int* graphic) {
  if (!seq || !graphic) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    const auto m = method == POTENT_GRAPHIC_KLEITMAN_WANG ? potent::GraphicMethod::KleitmanWang
                                                          : potent::GraphicMethod::ErdosGallai;
    *graphic = potent::is_graphic(seq->impl, m) ? 1 : 0;
    return POTENT_OK;
  });
}

potent_status potent_theorem22_applies(const potent_sequence* seq, int* applies) {
  if (!seq || !applies) return fail(POTENT_ERROR_INVALID, "null argument");
  *applies = potent::theorem22_check(seq->impl) == potent::Theorem22Result::AppliesAndGraphic ? 1 : 0;
  return POTENT_OK;
}

potent_status potent_potential_check(const potent_sequence* seq, potent_target target, char** verdict_json) {
  if (!seq || !verdict_json) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    const auto verdict = potent::check_potential(seq->impl, target_from(target));
    *verdict_json = copy_string(potent::verdict_to_json(verdict));
    return POTENT_OK;
  });
}

potent_status potent_oracle_search(const potent_sequence* seq, potent_target target, potent_oracle_mode mode,
                                   int max_vertices, char** result_json) {
  if (!seq || !result_json) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    const auto m = mode == POTENT_ORACLE_TOP_DEGREE ? potent::OracleMode::TopDegree
                                                    : potent::OracleMode::Exhaustive;
    const auto pattern = target_from(target);
    const auto result = potent::oracle_potential(seq->impl, pattern, m, max_vertices);
    *result_json = copy_string(potent::oracle_to_json(seq->impl, pattern, m, result));
    return POTENT_OK;
  });
}

potent_status potent_sigma_value(potent_target target, int n, potent_sigma_method method, int max_vertices,
                                 char** result_json) {
  if (!result_json) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    const auto m =
        method == POTENT_SIGMA_ORACLE ? potent::SigmaMethod::Oracle : potent::SigmaMethod::Predicate;
    const auto result = potent::sigma_value(target_from(target), n, m, max_vertices);
    *result_json = copy_string(potent::sigma_to_json(result));
    return POTENT_OK;
  });
}

potent_status potent_extremal_sequence(potent_target target, int n, potent_sequence** out) {
  if (!out) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    *out = new potent_sequence{potent::extremal_sequence(target_from(target), n)};
    return POTENT_OK;
  });
}

potent_status potent_sigma_closed_form(potent_target target, int n, long long* value) {
  if (!value) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&]() -> potent_status {
    const auto pattern = target_from(target);
    const auto formula = potent::sigma_closed_form(pattern.tag, n);
    if (!formula) return fail(POTENT_ERROR_DOMAIN, "no closed form asserted at this n");
    *value = *formula;
    return POTENT_OK;
  });
}

potent_status potent_verify_range(potent_target target, int n_min, int n_max, int workers, int max_vertices,
                                  char** report_json) {
  if (!report_json) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    const auto report = potent::verify_range(target_from(target), n_min, n_max, workers, max_vertices);
    *report_json = copy_string(potent::report_to_json(report));
    return POTENT_OK;
  });
}

potent_status potent_enum_graphic_create(int n, int positive_only, potent_enum** out) {
  if (!out) return fail(POTENT_ERROR_INVALID, "null argument");
  return guarded([&] {
    *out = new potent_enum{potent::GraphicSequenceStream(n, positive_only != 0)};
    return POTENT_OK;
  });
}

int potent_enum_graphic_next(potent_enum* e, potent_sequence** out) {
  if (!e || !out) {
    fail(POTENT_ERROR_INVALID, "null argument");
    return -static_cast<int>(POTENT_ERROR_INVALID);
  }
  try {
    auto next = e->impl.next();
    if (!next) return 0;
    *out = new potent_sequence{std::move(*next)};
    return 1;
  } catch (const std::exception& ex) {
    fail(POTENT_ERROR_INTERNAL, ex.what());
    return -static_cast<int>(POTENT_ERROR_INTERNAL);
  }
}

void potent_enum_free(potent_enum* e) { delete e; }

}  // extern "C"
