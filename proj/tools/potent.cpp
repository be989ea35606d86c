// potent: a command-line tool for potentially-H-graphic degree sequence
// analysis. Thin shell over the libpotent C API; see `potent --help`.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "potent.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // property fails / mismatch / not potential
constexpr int kExitUsage = 2;     // usage or domain error

struct SequenceHandle {
  potent_sequence* ptr = nullptr;
  ~SequenceHandle() { potent_sequence_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { potent_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void die(const std::string& message) {
  std::fprintf(stderr, "potent: %s\n", message.c_str());
  std::exit(kExitUsage);
}

void require_ok(potent_status status) {
  if (status != POTENT_OK) die(potent_last_error());
}

potent_sequence* parse_sequence_arg(const std::string& text) {
  potent_sequence* seq = nullptr;
  require_ok(potent_sequence_parse(text.c_str(), &seq));
  return seq;
}

potent_target target_from_name(const std::string& name) {
  if (name == "k23") return POTENT_TARGET_K23;
  if (name == "k5p4") return POTENT_TARGET_K5P4;
  if (name == "k33") return POTENT_TARGET_K33;
  if (name == "k6c6") return POTENT_TARGET_K6C6;
  die("unknown target '" + name + "' (expected k23, k5p4, k33 or k6c6)");
}

void emit(const json& doc, bool as_json) {
  if (as_json) std::printf("%s\n", doc.dump().c_str());
}

std::string render_violations(const json& violated) {
  std::string out;
  for (const auto& v : violated) {
    out += "  violates " + v["theorem"].get<std::string>() + " condition (" +
           std::to_string(v["condition"].get<int>()) + ")";
    if (!v["bindings"].empty()) {
      out += " with";
      for (auto it = v["bindings"].begin(); it != v["bindings"].end(); ++it)
        out += " " + it.key() + "=" + std::to_string(it.value().get<int>());
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& seq_text, const std::string& method, bool theorem22, bool as_json) {
  SequenceHandle seq{parse_sequence_arg(seq_text)};
  long long sigma = 0;
  int m = 0, h = 0, n = 0;
  require_ok(potent_sequence_stats(seq.ptr, &sigma, &m, &h, &n));

  int graphic = 0;
  json doc;
  StringHandle formatted;
  require_ok(potent_sequence_format(seq.ptr, &formatted.ptr));
  doc["sequence"] = formatted.str();
  if (method == "both") {
    int eg = 0, kw = 0;
    require_ok(potent_is_graphic(seq.ptr, POTENT_GRAPHIC_ERDOS_GALLAI, &eg));
    require_ok(potent_is_graphic(seq.ptr, POTENT_GRAPHIC_KLEITMAN_WANG, &kw));
    if (eg != kw) die("graphicality methods disagree (internal defect)");
    graphic = eg;
    doc["methods_agree"] = true;
  } else {
    require_ok(potent_is_graphic(
        seq.ptr, method == "kleitman-wang" ? POTENT_GRAPHIC_KLEITMAN_WANG : POTENT_GRAPHIC_ERDOS_GALLAI,
        &graphic));
  }
  doc["graphic"] = graphic != 0;
  doc["sigma"] = sigma;
  doc["m"] = m;
  doc["h"] = h;
  doc["n"] = n;
  if (theorem22) {
    int applies = 0;
    require_ok(potent_theorem22_applies(seq.ptr, &applies));
    doc["theorem22_applies"] = applies != 0;
  }

  if (as_json) {
    emit(doc, true);
  } else {
    std::printf("sequence: %s\n", doc["sequence"].get<std::string>().c_str());
    std::printf("graphic: %s\n", graphic ? "yes" : "no");
    std::printf("sigma=%lld m=%d h=%d n=%d\n", sigma, m, h, n);
    if (theorem22)
      std::printf("theorem-2.2 hypothesis: %s\n", doc["theorem22_applies"].get<bool>() ? "applies" : "not applicable");
  }
  return graphic ? kExitOk : kExitNegative;
}

int cmd_potential(const std::string& seq_text, const std::string& target_name, bool as_json) {
  SequenceHandle seq{parse_sequence_arg(seq_text)};
  StringHandle verdict;
  require_ok(potent_potential_check(seq.ptr, target_from_name(target_name), &verdict.ptr));
  json v = json::parse(verdict.str());

  StringHandle formatted;
  require_ok(potent_sequence_format(seq.ptr, &formatted.ptr));
  json doc;
  doc["sequence"] = formatted.str();
  doc["target"] = target_name;
  doc["potential"] = v["potential"];
  doc["violated"] = v["violated"];

  const bool potential = v["potential"].get<bool>();
  if (as_json) {
    emit(doc, true);
  } else {
    std::printf("potentially %s-graphic: %s\n", target_name.c_str(), potential ? "yes" : "no");
    std::fputs(render_violations(v["violated"]).c_str(), stdout);
  }
  return potential ? kExitOk : kExitNegative;
}

int cmd_oracle(const std::string& seq_text, const std::string& target_name, const std::string& mode,
               int max_n, bool as_json) {
  SequenceHandle seq{parse_sequence_arg(seq_text)};
  StringHandle result;
  require_ok(potent_oracle_search(seq.ptr, target_from_name(target_name),
                                  mode == "top-degree" ? POTENT_ORACLE_TOP_DEGREE : POTENT_ORACLE_EXHAUSTIVE,
                                  max_n, &result.ptr));
  json doc = json::parse(result.str());
  const bool potential = doc["potential"].get<bool>();
  if (as_json) {
    std::printf("%s\n", result.str().c_str());
  } else if (potential) {
    std::printf("witness found: realization of %s contains %s\n", doc["sequence"].get<std::string>().c_str(),
                target_name.c_str());
    std::string edges;
    for (const auto& e : doc["graph"]["edges"])
      edges += " " + std::to_string(e[0].get<int>()) + "-" + std::to_string(e[1].get<int>());
    std::printf("edges:%s\n", edges.c_str());
    std::string embedding;
    for (const auto& p : doc["embedding"]) embedding += " " + std::to_string(p.get<int>());
    std::printf("embedding (pattern vertex -> position):%s\n", embedding.c_str());
  } else {
    std::printf("no realization contains %s (exhausted %lld states)\n", target_name.c_str(),
                doc["states_explored"].get<long long>());
  }
  return potential ? kExitOk : kExitNegative;
}

int cmd_lay_off(const std::string& seq_text, int k, bool as_json) {
  SequenceHandle seq{parse_sequence_arg(seq_text)};
  const int n = potent_sequence_length(seq.ptr);
  if (k == 0) k = n;  // default pivot: the last term
  StringHandle formatted;
  require_ok(potent_sequence_format(seq.ptr, &formatted.ptr));

  SequenceHandle residual;
  const potent_status status = potent_sequence_lay_off(seq.ptr, k, &residual.ptr);
  if (status == POTENT_ERROR_LAYOFF) {
    json doc;
    doc["sequence"] = formatted.str();
    doc["k"] = k;
    doc["failed"] = true;
    doc["reason"] = potent_last_error();
    if (as_json)
      emit(doc, true);
    else
      std::printf("lay-off failed: %s\n", potent_last_error());
    return kExitNegative;
  }
  require_ok(status);

  StringHandle residual_text;
  require_ok(potent_sequence_format(residual.ptr, &residual_text.ptr));
  json doc;
  doc["sequence"] = formatted.str();
  doc["k"] = k;
  doc["residual"] = residual_text.str();
  if (as_json)
    emit(doc, true);
  else
    std::printf("%s\n", residual_text.str().c_str());
  return kExitOk;
}

int cmd_enumerate(int n, bool positive, bool as_json) {
  potent_enum* stream = nullptr;
  require_ok(potent_enum_graphic_create(n, positive ? 1 : 0, &stream));
  json sequences = json::array();
  for (;;) {
    potent_sequence* raw = nullptr;
    const int rc = potent_enum_graphic_next(stream, &raw);
    if (rc < 0) {
      potent_enum_free(stream);
      die(potent_last_error());
    }
    if (rc == 0) break;
    SequenceHandle seq{raw};
    StringHandle text;
    require_ok(potent_sequence_format(seq.ptr, &text.ptr));
    if (as_json)
      sequences.push_back(text.str());
    else
      std::printf("%s\n", text.str().c_str());
  }
  potent_enum_free(stream);
  if (as_json) {
    json doc;
    doc["n"] = n;
    doc["positive"] = positive;
    doc["count"] = sequences.size();
    doc["sequences"] = std::move(sequences);
    emit(doc, true);
  }
  return kExitOk;
}

int cmd_sigma(const std::string& target_name, int n, const std::string& method, int max_n, bool as_json) {
  StringHandle result;
  require_ok(potent_sigma_value(target_from_name(target_name), n,
                                method == "oracle" ? POTENT_SIGMA_ORACLE : POTENT_SIGMA_PREDICATE, max_n,
                                &result.ptr));
  json doc = json::parse(result.str());
  long long formula = 0;
  if (potent_sigma_closed_form(target_from_name(target_name), n, &formula) == POTENT_OK) {
    doc["formula"] = formula;
    doc["formula_matches"] = formula == doc["sigma"].get<long long>();
  }
  if (as_json) {
    emit(doc, true);
  } else {
    std::printf("sigma(%s, %d) = %lld  [%s scan over %lld sequences]\n", target_name.c_str(), n,
                doc["sigma"].get<long long>(), method.c_str(), doc["sequences_scanned"].get<long long>());
    if (!doc["extremal"].is_null())
      std::printf("extremal: %s\n", doc["extremal"].get<std::string>().c_str());
    if (doc.contains("formula"))
      std::printf("closed form: %lld (%s)\n", formula, doc["formula_matches"].get<bool>() ? "matches" : "MISMATCH");
  }
  if (doc.contains("formula_matches") && !doc["formula_matches"].get<bool>()) return kExitNegative;
  return kExitOk;
}

int cmd_extremal(const std::string& target_name, int n, bool as_json) {
  SequenceHandle seq;
  require_ok(potent_extremal_sequence(target_from_name(target_name), n, &seq.ptr));
  StringHandle text;
  require_ok(potent_sequence_format(seq.ptr, &text.ptr));
  long long sigma = 0;
  require_ok(potent_sequence_stats(seq.ptr, &sigma, nullptr, nullptr, nullptr));
  json doc;
  doc["target"] = target_name;
  doc["n"] = n;
  doc["sequence"] = text.str();
  doc["sigma"] = sigma;
  if (as_json)
    emit(doc, true);
  else
    std::printf("%s  (sigma=%lld)\n", text.str().c_str(), sigma);
  return kExitOk;
}

int cmd_verify(const std::string& target_name, int n_min, int n_max, int workers, int max_n, bool as_json) {
  StringHandle result;
  require_ok(potent_verify_range(target_from_name(target_name), n_min, n_max, workers, max_n, &result.ptr));
  json doc = json::parse(result.str());
  const auto mismatches = doc["mismatches"].size();
  if (as_json) {
    std::printf("%s\n", result.str().c_str());
  } else {
    std::printf("verified %s on n in [%d, %d]: %lld sequences, %lld agreements, %zu mismatches\n",
                target_name.c_str(), n_min, n_max, doc["sequences_tested"].get<long long>(),
                doc["agreements"].get<long long>(), mismatches);
    for (const auto& m : doc["mismatches"])
      std::printf("MISMATCH %s: predicate says %s, oracle says %s\n",
                  m["sequence"].get<std::string>().c_str(),
                  m["predicate_verdict"]["potential"].get<bool>() ? "potential" : "not potential",
                  m["oracle_result"]["potential"].get<bool>() ? "potential" : "not potential");
  }
  return mismatches == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-sequence toolkit: graphicality, potentially-H-graphic characterizations,\n"
               "an exhaustive realization oracle, and sigma(H, n) computation"};
  app.require_subcommand(1);

  std::string seq_text, target_name = "k33", mode = "exhaustive", method = "both", format = "text";
  std::string sigma_method = "predicate";
  int n = 0, n_min = 0, n_max = 0, workers = 1, max_n = 10, k = 0;
  bool positive = false, theorem22 = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_target = [&](CLI::App* cmd) {
    cmd->add_option("--target", target_name, "target pattern")
        ->check(CLI::IsMember({"k23", "k5p4", "k33", "k6c6"}));
  };

  CLI::App* check = app.add_subcommand("check", "test whether a sequence is graphic");
  check->add_option("sequence", seq_text, "degree sequence, e.g. \"6^2 4^3 3^2\"")->required();
  check->add_flag("--graphic", "test graphicality (the default)");
  check->add_flag("--theorem22", theorem22, "also report the small-term sufficiency test");
  check->add_option("--method", method, "graphicality test")
      ->check(CLI::IsMember({"erdos-gallai", "kleitman-wang", "both"}));
  add_format(check);

  CLI::App* potential = app.add_subcommand("potential", "characterization predicate for a target");
  potential->add_option("sequence", seq_text)->required();
  add_target(potential);
  add_format(potential);

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search for a realization containing the target");
  oracle->add_option("sequence", seq_text)->required();
  add_target(oracle);
  oracle->add_option("--mode", mode, "search mode")->check(CLI::IsMember({"exhaustive", "top-degree"}));
  oracle->add_option("--max-n", max_n, "vertex cap for the search (hard maximum 16)");
  add_format(oracle);

  CLI::App* layoff = app.add_subcommand("lay-off", "residual sequence after laying off d_k");
  layoff->add_option("sequence", seq_text)->required();
  layoff->add_option("--k", k, "1-based position to lay off (default: the last term)");
  add_format(layoff);

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream graphic sequences with n terms");
  enumerate->add_option("--n", n, "term count")->required();
  enumerate->add_flag("--positive", positive, "restrict to sequences without zero terms");
  add_format(enumerate);

  CLI::App* sigma = app.add_subcommand("sigma", "compute sigma(H, n) by scanning all positive graphic sequences");
  add_target(sigma);
  sigma->add_option("--n", n, "term count")->required();
  sigma->add_option("--method", sigma_method, "decision method")
      ->check(CLI::IsMember({"predicate", "oracle"}));
  sigma->add_option("--max-n", max_n, "vertex cap for the oracle method");
  add_format(sigma);

  CLI::App* extremal = app.add_subcommand("extremal", "extremal non-potential sequence construction");
  add_target(extremal);
  extremal->add_option("--n", n, "term count")->required();
  add_format(extremal);

  CLI::App* verify = app.add_subcommand("verify", "compare predicate and oracle over a range of n");
  add_target(verify);
  verify->add_option("--n-min", n_min, "smallest n")->required();
  verify->add_option("--n-max", n_max, "largest n")->required();
  verify->add_option("--workers", workers, "worker threads (report is independent of this)");
  verify->add_option("--max-n", max_n, "oracle vertex cap");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "potent: %s\n", e.what());
    return kExitUsage;
  }

  const bool as_json = format == "json";
  try {
    if (app.got_subcommand(check)) return cmd_check(seq_text, method, theorem22, as_json);
    if (app.got_subcommand(potential)) return cmd_potential(seq_text, target_name, as_json);
    if (app.got_subcommand(oracle)) return cmd_oracle(seq_text, target_name, mode, max_n, as_json);
    if (app.got_subcommand(layoff)) return cmd_lay_off(seq_text, k, as_json);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(n, positive, as_json);
    if (app.got_subcommand(sigma))
      return cmd_sigma(target_name, n, sigma_method, max_n, as_json);
    if (app.got_subcommand(extremal)) return cmd_extremal(target_name, n, as_json);
    if (app.got_subcommand(verify)) return cmd_verify(target_name, n_min, n_max, workers, max_n, as_json);
  } catch (const std::exception& e) {
    die(e.what());
  }
  return kExitUsage;
}
