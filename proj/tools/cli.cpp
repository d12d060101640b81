#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "adjecc/code_spec.hpp"
#include "adjecc/codec.hpp"
#include "adjecc/constraints.hpp"
#include "adjecc/errors.hpp"
#include "adjecc/hdl.hpp"
#include "adjecc/search.hpp"
#include "adjecc/verifier.hpp"
#include "adjecc/xor_network.hpp"

namespace adjecc::cli {

namespace {

using nlohmann::json;

constexpr const char* builtin_token = "builtin2316";

struct Globals {
  std::string code = builtin_token;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> level;

  bool json() const { return format == "json"; }
};

/// Input problems that are not CLI11 parse errors but still count as usage.
class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const Globals& g) {
  if (g.seed) return *g.seed;
  if (const char* env = std::getenv("ECC_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw usage_error("ECC_SEED is not a decimal integer");
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Capability> parse_level(const std::optional<std::string>& level) {
  if (!level) return std::nullopt;
  return capability_from_token(*level);
}

struct LoadedCode {
  CheckMatrix matrix;
  std::optional<CodeSpec> spec;
  std::optional<Capability> declared;
  std::string name;
};

/// Reads builtin2316 or a code file. Matrix-only files get a CodeSpec via
/// verify_and_wrap when `need_spec` is set.
LoadedCode load_code(const std::string& token, bool need_spec, std::optional<Capability> level) {
  if (token == builtin_token) {
    CodeSpec spec = builtin_2316();
    return {spec.matrix(), spec, spec.capability(), spec.name()};
  }
  const std::string name = std::filesystem::path(token).stem().string();
  CodeFile file = parse_code_file(read_file(token));
  LoadedCode loaded{file.matrix, std::nullopt, file.capability, name};
  if (file.layout) {
    if (!file.capability) throw parse_error(0, "layout given without a capability line");
    loaded.spec.emplace(name, file.matrix, *file.layout, *file.capability);
  } else if (need_spec) {
    const Capability cap = file.capability.value_or(level.value_or(Capability::SecDaecTaec));
    loaded.spec = verify_and_wrap(file.matrix, cap, name);
    loaded.declared = cap;
  }
  return loaded;
}

BitVec parse_message(const std::string& text, std::size_t k) {
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::string bits;
    for (char ch : text.substr(2)) {
      int v;
      if (ch >= '0' && ch <= '9')
        v = ch - '0';
      else if (ch >= 'a' && ch <= 'f')
        v = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F')
        v = ch - 'A' + 10;
      else
        throw usage_error("invalid hex digit '" + std::string(1, ch) + "'");
      for (int b = 3; b >= 0; --b) bits += ((v >> b) & 1) ? '1' : '0';
    }
    if (bits.size() < k) throw usage_error("hex message has fewer than " + std::to_string(k) + " bits");
    const std::size_t excess = bits.size() - k;
    if (bits.find('1') < excess) throw usage_error("hex message does not fit in " + std::to_string(k) + " bits");
    return BitVec::from_string(bits.substr(excess));
  }
  if (text.size() != k)
    throw usage_error("message must be " + std::to_string(k) + " binary digits or 0x-prefixed hex");
  return BitVec::from_string(text);
}

std::string span_text(const std::optional<ErrorPattern>& p) {
  if (!p) return "none";
  return "(" + std::to_string(p->start) + "," + std::to_string(p->width) + ")";
}

json span_json(const std::optional<ErrorPattern>& p) {
  if (!p) return nullptr;
  return json{{"start", p->start}, {"width", p->width}};
}

std::string pattern_text(const ErrorPattern& p) {
  return "{start=" + std::to_string(p.start) + ",width=" + std::to_string(p.width) + "}";
}

std::string_view constraint_name(Constraint c) {
  switch (c) {
  case Constraint::Sec: return "SEC";
  case Constraint::Daec: return "DAEC";
  case Constraint::Taec: return "TAEC";
  }
  return "?";
}

// ---------------------------------------------------------------------------

int cmd_check(const Globals& g, std::ostream& out) {
  const auto level = parse_level(g.level);
  const LoadedCode code = load_code(g.code, false, level);
  const Capability required = level.value_or(code.declared.value_or(Capability::SecDaecTaec));
  const ConstraintReport report = check_all(code.matrix);
  const bool pass = report.satisfies(required);

  if (g.json()) {
    json violations = json::array();
    for (const auto& v : report.violations)
      violations.push_back({{"constraint", constraint_name(v.constraint)},
                            {"first", span_json(v.first)},
                            {"second", span_json(v.second)},
                            {"syndrome", v.syndrome.to_string()}});
    out << json{{"code", code.name},
                {"n", code.matrix.cols()},
                {"k", code.matrix.cols() - code.matrix.rows()},
                {"required", to_token(required)},
                {"sec", report.sec_ok},
                {"daec", report.daec_ok},
                {"taec", report.taec_ok},
                {"literal_taec", report.literal_taec_ok},
                {"violations", violations},
                {"result", pass ? "PASS" : "FAIL"}}
                   .dump(2)
        << "\n";
    return pass ? 0 : 1;
  }

  out << "code: " << code.name << " (" << code.matrix.cols() << ","
      << code.matrix.cols() - code.matrix.rows() << ")\n";
  out << "SEC  " << (report.sec_ok ? "PASS" : "FAIL") << "\n";
  out << "DAEC " << (report.daec_ok ? "PASS" : "FAIL") << "\n";
  out << "TAEC " << (report.taec_ok ? "PASS" : "FAIL") << "\n";
  out << "TAEC (triples vs singles only) " << (report.literal_taec_ok ? "PASS" : "FAIL") << "\n";
  for (const auto& v : report.violations)
    out << "collision: " << pattern_text(v.first) << " vs "
        << (v.second ? pattern_text(*v.second) : std::string("{no-error}"))
        << " syndrome=" << v.syndrome.to_string() << " [" << constraint_name(v.constraint) << "]\n";
  out << "result: " << (pass ? "PASS" : "FAIL") << " at " << to_token(required) << "\n";
  return pass ? 0 : 1;
}

struct SearchArgs {
  std::size_t n = 0;
  std::size_t k = 16;
  std::string capability = "taec";
  std::string order = "lex";
  std::uint64_t max_backtracks = 10'000'000;
  std::string out;
};

int cmd_search(const Globals& g, const SearchArgs& a, std::ostream& out) {
  SearchConfig config;
  config.k = a.k;
  config.capability = capability_from_token(a.capability);
  config.n = a.n ? a.n : a.k + default_check_bits(a.k, config.capability);
  config.seed = resolve_seed(g);
  config.max_backtracks = a.max_backtracks;
  if (a.order == "lex")
    config.column_order = ColumnOrder::Lexicographic;
  else if (a.order == "random")
    config.column_order = ColumnOrder::Randomized;
  else
    throw usage_error("--order must be lex or random");

  const SearchResult result = search(config);
  const char* status = result.status == SearchStatus::Found        ? "Found"
                       : result.status == SearchStatus::Infeasible ? "Infeasible"
                                                                   : "BudgetExhausted";
  std::string text;
  if (result.code) {
    text = render_code_spec(*result.code);
    if (!a.out.empty()) {
      std::ofstream file(a.out, std::ios::binary);
      if (!file) throw usage_error("cannot write '" + a.out + "'");
      file << text;
    }
  }

  if (g.json()) {
    json j{{"n", config.n},         {"k", config.k},   {"capability", to_token(config.capability)},
           {"seed", config.seed},   {"order", a.order}, {"status", status},
           {"backtracks", result.backtracks}};
    if (result.code) j["code"] = text;
    out << j.dump(2) << "\n";
  } else {
    out << "search (" << config.n << "," << config.k << ") " << to_token(config.capability)
        << " order=" << a.order << " seed=" << config.seed << "\n";
    out << "status: " << status << " backtracks=" << result.backtracks << "\n";
    if (result.code && a.out.empty()) out << text;
    if (result.code && !a.out.empty()) out << "wrote " << a.out << "\n";
  }
  return result.status == SearchStatus::Found ? 0 : 1;
}

int cmd_encode(const Globals& g, const std::string& message_text, std::ostream& out) {
  const LoadedCode code = load_code(g.code, true, parse_level(g.level));
  const CodeSpec& spec = *code.spec;
  const BitVec message = parse_message(message_text, spec.k());
  const BitVec parity = encode_parity(spec, message);
  const BitVec codeword = assemble(spec, message, parity);
  if (g.json()) {
    out << json{{"code", spec.name()},
                {"message", message.to_string()},
                {"parity", parity.to_string()},
                {"codeword", codeword.to_string()}}
                   .dump(2)
        << "\n";
  } else {
    out << codeword.to_string() << "\n";
    out << "parity " << parity.to_string() << "\n";
  }
  return 0;
}

int cmd_decode(const Globals& g, const std::string& word, std::ostream& out) {
  const LoadedCode code = load_code(g.code, true, parse_level(g.level));
  const CodeSpec& spec = *code.spec;
  if (word.size() != spec.n()) throw usage_error("word must be " + std::to_string(spec.n()) + " binary digits");
  const DecodeOutcome o = decode(spec, BitVec::from_string(word));
  if (g.json()) {
    out << json{{"code", spec.name()},
                {"outcome", to_string(o.kind)},
                {"span", span_json(o.error_span)},
                {"syndrome", o.syndrome.to_string()},
                {"message", o.message.to_string()}}
                   .dump(2)
        << "\n";
  } else {
    out << to_string(o.kind) << " span=" << span_text(o.error_span) << " syndrome=" << o.syndrome.to_string()
        << " message=" << o.message.to_string() << "\n";
  }
  return 0;
}

json tally_json(const ClassTally& t) {
  return {{"tested", t.tested},
          {"corrected", t.corrected},
          {"detected", t.detected},
          {"miscorrected", t.miscorrected},
          {"silent", t.silent}};
}

void print_tally(std::ostream& out, PatternClass cls, const ClassTally& t) {
  out << "  " << std::left << std::setw(16) << to_string(cls) << std::right << " tested=" << t.tested
      << " corrected=" << t.corrected << " detected=" << t.detected << " miscorrected=" << t.miscorrected
      << "\n";
}

int cmd_verify(const Globals& g, std::size_t probe, std::size_t messages, std::ostream& out) {
  const auto level = parse_level(g.level);
  const LoadedCode code = load_code(g.code, true, level);
  const CodeSpec& spec = *code.spec;
  const std::uint64_t seed = resolve_seed(g);
  const VerificationReport report = verify_exhaustive(spec, level, seed, messages);
  std::optional<VerificationReport> probed;
  if (probe > 0) probed = probe_uncorrectable(spec, probe, seed);
  const bool pass = report.passed();

  if (g.json()) {
    json classes = json::object();
    for (std::size_t c = 0; c + 1 < pattern_class_count; ++c)
      classes[std::string(to_string(static_cast<PatternClass>(c)))] = tally_json(report.classes[c]);
    json witnesses = json::array();
    for (const auto& w : report.witnesses)
      witnesses.push_back({{"message", w.message.to_string()},
                           {"error", w.error.to_string()},
                           {"injected", span_json(w.injected)},
                           {"outcome", to_string(w.outcome.kind)},
                           {"decoded_span", span_json(w.outcome.error_span)}});
    json j{{"code", spec.name()},
           {"level", to_token(report.level)},
           {"seed", seed},
           {"messages", report.messages},
           {"classes", classes},
           {"miscorrected", report.total_miscorrected()},
           {"witnesses", witnesses},
           {"message_independent", report.message_independent},
           {"elapsed_ms", std::chrono::duration<double, std::milli>(report.elapsed).count()},
           {"result", pass ? "PASS" : "FAIL"}};
    if (probed) j["probe"] = {{"samples", probe}, {"other", tally_json(probed->tally(PatternClass::Other))}};
    out << j.dump(2) << "\n";
    return pass ? 0 : 1;
  }

  out << "verify " << spec.name() << " (" << spec.n() << "," << spec.k() << ") at " << to_token(report.level)
      << " seed=" << seed << " messages=" << report.messages << "\n";
  for (std::size_t c = 0; c + 1 < pattern_class_count; ++c)
    print_tally(out, static_cast<PatternClass>(c), report.classes[c]);
  for (const auto& w : report.witnesses)
    out << "  miscorrection: message=" << w.message.to_string() << " injected=" << span_text(w.injected)
        << " decoded=" << to_string(w.outcome.kind) << " span=" << span_text(w.outcome.error_span) << "\n";
  if (report.total_miscorrected() > report.witnesses.size())
    out << "  (" << report.total_miscorrected() - report.witnesses.size() << " more miscorrections not listed)\n";
  out << "  elapsed " << std::fixed << std::setprecision(3)
      << std::chrono::duration<double, std::milli>(report.elapsed).count() << " ms\n";
  if (probed) {
    out << "probe " << probe << " uncorrectable samples seed=" << seed << "\n";
    print_tally(out, PatternClass::Other, probed->tally(PatternClass::Other));
    out << "  silent=" << probed->tally(PatternClass::Other).silent << "\n";
  }
  out << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

ProgramSide parse_side(const std::string& side) {
  if (side == "encoder") return ProgramSide::Encoder;
  if (side == "syndrome" || side == "decoder") return ProgramSide::Syndrome;
  throw usage_error("--side must be encoder or syndrome");
}

/// "auto" means the hand-factored form for the built-in encoder, greedy otherwise.
CsePolicy resolve_policy(const std::string& policy, const CodeSpec& spec, ProgramSide side) {
  if (policy == "greedy") return CsePolicy::GreedyPair;
  if (policy == "hand") return CsePolicy::HandShared;
  if (policy == "auto")
    return side == ProgramSide::Encoder && is_builtin_2316(spec) ? CsePolicy::HandShared : CsePolicy::GreedyPair;
  throw usage_error("--policy must be greedy, hand or auto");
}

const char* policy_name(CsePolicy p) { return p == CsePolicy::GreedyPair ? "GreedyPair" : "HandShared"; }

json cost_json(const CostReport& c) {
  json outputs = json::array();
  for (const auto& o : c.outputs)
    outputs.push_back({{"name", o.name}, {"fanin", o.fanin}, {"terms", o.flattened_terms}, {"depth", o.depth}});
  return {{"xor2_count", c.xor2_count}, {"depth", c.depth}, {"outputs", outputs}};
}

void print_cost(std::ostream& out, const char* label, const CostReport& c) {
  out << label << ": xor2=" << c.xor2_count << " depth=" << c.depth << "\n";
  for (const auto& o : c.outputs)
    out << "  " << o.name << " fanin=" << o.fanin << " terms=" << o.flattened_terms << " depth=" << o.depth << "\n";
}

int cmd_optimize(const Globals& g, const std::string& side_text, const std::string& policy_text, bool report,
                 bool dump, std::ostream& out) {
  const LoadedCode code = load_code(g.code, true, parse_level(g.level));
  const CodeSpec& spec = *code.spec;
  const ProgramSide side = parse_side(side_text);
  const CsePolicy policy = resolve_policy(policy_text, spec, side);
  const XorProgram before = extract_program(spec, side);
  const XorProgram after = optimize_cse(before, policy);
  const CostReport cb = cost(before), ca = cost(after);

  if (g.json()) {
    json j{{"code", spec.name()}, {"side", side == ProgramSide::Encoder ? "encoder" : "syndrome"},
           {"policy", policy_name(policy)}, {"before", cost_json(cb)}, {"after", cost_json(ca)},
           {"power", "not modeled"}};
    if (dump) j["program"] = render_program(after);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "optimize " << spec.name() << " side=" << (side == ProgramSide::Encoder ? "encoder" : "syndrome")
      << " policy=" << policy_name(policy) << "\n";
  if (report) {
    print_cost(out, "before", cb);
    print_cost(out, "after", ca);
    out << "power: not modeled\n";
  } else {
    out << "xor2 " << cb.xor2_count << " -> " << ca.xor2_count << ", depth " << cb.depth << " -> " << ca.depth
        << "\n";
  }
  if (dump) out << render_program(after);
  return 0;
}

int cmd_emit(const Globals& g, const std::string& what, const std::string& policy_text, const std::string& path,
             std::ostream& out) {
  const LoadedCode code = load_code(g.code, true, parse_level(g.level));
  const CodeSpec& spec = *code.spec;
  HdlArtifact artifact;
  if (what == "encoder") {
    XorProgram program = extract_program(spec, ProgramSide::Encoder);
    if (policy_text != "none") program = optimize_cse(program, resolve_policy(policy_text, spec, ProgramSide::Encoder));
    artifact = emit_encoder(spec, program);
  } else if (what == "decoder") {
    artifact = emit_decoder(spec);
  } else {
    throw usage_error("--what must be encoder or decoder");
  }

  if (!path.empty()) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw usage_error("cannot write '" + path + "'");
    file << artifact.text;
  }
  if (g.json()) {
    out << json{{"module", artifact.module_name}, {"path", path}, {"text", artifact.text}}.dump(2) << "\n";
  } else if (path.empty()) {
    out << artifact.text;
  } else {
    out << "wrote " << artifact.module_name << " to " << path << "\n";
  }
  return 0;
}

struct ReportRow {
  std::string scheme;
  std::size_t k = 0, n = 0;
  std::string capability;
  bool pass = false;
  std::string reason;
  std::size_t enc_naive = 0, enc_opt = 0, enc_depth = 0, syn_naive = 0, syn_opt = 0, syn_depth = 0;
  std::string policy;
};

ReportRow report_row(const std::string& token, std::uint64_t seed) {
  ReportRow row;
  row.scheme = token;
  try {
    const LoadedCode code = load_code(token, true, std::nullopt);
    const CodeSpec& spec = *code.spec;
    row.scheme = spec.name();
    row.k = spec.k();
    row.n = spec.n();
    row.capability = std::string(to_token(spec.capability()));
    if (!check_all(spec.matrix()).satisfies(spec.capability())) {
      row.reason = "fails " + row.capability + " check";
      return row;
    }
    const CsePolicy policy = resolve_policy("auto", spec, ProgramSide::Encoder);
    row.policy = policy_name(policy);
    const XorProgram enc = extract_program(spec, ProgramSide::Encoder);
    const XorProgram syn = extract_program(spec, ProgramSide::Syndrome);
    const CostReport enc_opt = cost(optimize_cse(enc, policy));
    const CostReport syn_opt = cost(optimize_cse(syn, CsePolicy::GreedyPair));
    row.enc_naive = cost(enc).xor2_count;
    row.enc_opt = enc_opt.xor2_count;
    row.enc_depth = enc_opt.depth;
    row.syn_naive = cost(syn).xor2_count;
    row.syn_opt = syn_opt.xor2_count;
    row.syn_depth = syn_opt.depth;
    row.pass = verify_exhaustive(spec, std::nullopt, seed).passed();
    if (!row.pass) row.reason = "miscorrection or uncorrected burst";
  } catch (const std::exception& e) {
    row.reason = e.what();
  }
  return row;
}

int cmd_report(const Globals& g, const std::vector<std::string>& codes, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(g);
  std::vector<ReportRow> rows;
  for (const auto& token : codes) rows.push_back(report_row(token, seed));
  const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });

  ReportRow total;
  for (const auto& r : rows)
    if (r.pass) {
      total.enc_naive += r.enc_naive;
      total.enc_opt += r.enc_opt;
      total.syn_naive += r.syn_naive;
      total.syn_opt += r.syn_opt;
    }

  if (g.json()) {
    json jrows = json::array();
    for (const auto& r : rows) {
      json jr{{"scheme", r.scheme}, {"result", r.pass ? "PASS" : "FAIL"}};
      if (!r.reason.empty()) jr["reason"] = r.reason;
      if (r.n) {
        jr["n"] = r.n;
        jr["data_bits"] = r.k;
        jr["capability"] = r.capability;
      }
      if (r.pass)
        jr["proxy"] = {{"encoder_xor2_naive", r.enc_naive}, {"encoder_xor2_optimized", r.enc_opt},
                       {"encoder_depth", r.enc_depth},      {"encoder_policy", r.policy},
                       {"syndrome_xor2_naive", r.syn_naive}, {"syndrome_xor2_optimized", r.syn_opt},
                       {"syndrome_depth", r.syn_depth}};
      jrows.push_back(jr);
    }
    out << json{{"note", "software proxy: 2-input XOR count for area, XOR depth for delay; power not modeled"},
                {"seed", seed},
                {"rows", jrows},
                {"totals",
                 {{"encoder_xor2_naive", total.enc_naive},
                  {"encoder_xor2_optimized", total.enc_opt},
                  {"syndrome_xor2_naive", total.syn_naive},
                  {"syndrome_xor2_optimized", total.syn_opt}}}}
                   .dump(2)
        << "\n";
    return all_pass ? 0 : 1;
  }

  out << "Software proxy for codec cost: area = 2-input XOR gates, delay = XOR levels; power not modeled.\n";
  out << "seed=" << seed << "\n";
  out << std::left << std::setw(24) << "Scheme" << std::right << std::setw(6) << "Data" << std::setw(5) << "n"
      << std::setw(6) << "Cap" << std::setw(11) << "Enc.naive" << std::setw(9) << "Enc.opt" << std::setw(11)
      << "Enc.depth" << std::setw(11) << "Syn.naive" << std::setw(9) << "Syn.opt" << std::setw(11) << "Syn.depth"
      << "  Verify\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(24) << r.scheme << std::right;
    if (r.pass) {
      out << std::setw(6) << r.k << std::setw(5) << r.n << std::setw(6) << r.capability << std::setw(11)
          << r.enc_naive << std::setw(9) << r.enc_opt << std::setw(11) << r.enc_depth << std::setw(11)
          << r.syn_naive << std::setw(9) << r.syn_opt << std::setw(11) << r.syn_depth << "  PASS\n";
    } else {
      out << "  FAIL (" << r.reason << ")\n";
    }
  }
  if (!rows.empty())
    out << std::left << std::setw(41) << "Totals (passing codes)" << std::right << std::setw(11) << total.enc_naive
        << std::setw(9) << total.enc_opt << std::setw(11) << "" << std::setw(11) << total.syn_naive << std::setw(9)
        << total.syn_opt << "\n";
  return all_pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, optimize and emit SEC-DAEC / SEC-DAEC-TAEC memory codes", "adjecc"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint64_t seed_value = 0;
  app.add_option("--code", g.code, "builtin2316 or a code file")->capture_default_str();
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed_value, "seed for randomized paths (fallback: $ECC_SEED, then 1)");
  app.add_option("--level", g.level, "capability to check/verify against: sec, daec or taec");

  auto* check = app.add_subcommand("check", "check SEC/DAEC/TAEC column constraints");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "construct an H-matrix by backtracking search");
  search_cmd->add_option("--n", search_args.n, "code length (default: k + 7, 8 or 10 for k = 16, 32, 64)");
  search_cmd->add_option("--k", search_args.k, "data bits")->capture_default_str();
  search_cmd->add_option("--capability", search_args.capability, "sec, daec or taec")->capture_default_str();
  search_cmd->add_option("--order", search_args.order, "lex or random")->capture_default_str();
  search_cmd->add_option("--max-backtracks", search_args.max_backtracks)->capture_default_str();
  search_cmd->add_option("--out", search_args.out, "write the code file here");

  std::string message;
  auto* encode_cmd = app.add_subcommand("encode", "encode a message");
  encode_cmd->add_option("--message", message, "binary (position 1 first) or 0x-prefixed hex")->required();

  std::string word;
  auto* decode_cmd = app.add_subcommand("decode", "decode a received word");
  decode_cmd->add_option("--word", word, "binary received word, position 1 first")->required();

  std::size_t probe = 0, messages = 100;
  auto* verify_cmd = app.add_subcommand("verify", "inject every correctable burst and count miscorrections");
  verify_cmd->add_option("--probe", probe, "also sample N uncorrectable patterns");
  verify_cmd->add_option("--messages", messages, "random messages besides the zero message")->capture_default_str();

  std::string side = "encoder", policy = "auto";
  bool with_report = false, dump = false;
  auto* optimize_cmd = app.add_subcommand("optimize", "apply XOR common-subexpression elimination");
  optimize_cmd->add_option("--side", side, "encoder or syndrome")->capture_default_str();
  optimize_cmd->add_option("--policy", policy, "greedy, hand or auto")->capture_default_str();
  optimize_cmd->add_flag("--report", with_report, "print before/after cost reports");
  optimize_cmd->add_flag("--dump", dump, "print the optimized program");

  std::string what = "encoder", emit_policy = "auto", emit_out;
  auto* emit_cmd = app.add_subcommand("emit", "emit combinational Verilog");
  emit_cmd->add_option("--what", what, "encoder or decoder")->capture_default_str();
  emit_cmd->add_option("--policy", emit_policy, "encoder CSE: none, greedy, hand or auto")->capture_default_str();
  emit_cmd->add_option("--out", emit_out, "output file (default: stdout)");

  std::vector<std::string> report_codes;
  auto* report_cmd = app.add_subcommand("report", "tabulate software cost proxies for several codes");
  report_cmd->add_option("codes", report_codes, "builtin2316 or code files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n"
        << "usage: adjecc [--code C] [--format text|json] [--seed N] "
           "<check|search|encode|decode|verify|optimize|emit|report> [options]\n";
    return 2;
  }
  if (seed_opt->count() > 0) g.seed = seed_value;

  try {
    if (*check) return cmd_check(g, out);
    if (*search_cmd) return cmd_search(g, search_args, out);
    if (*encode_cmd) return cmd_encode(g, message, out);
    if (*decode_cmd) return cmd_decode(g, word, out);
    if (*verify_cmd) return cmd_verify(g, probe, messages, out);
    if (*optimize_cmd) return cmd_optimize(g, side, policy, with_report, dump, out);
    if (*emit_cmd) return cmd_emit(g, what, emit_policy, emit_out, out);
    if (*report_cmd) return cmd_report(g, report_codes, out);
  } catch (const rejected_code& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace adjecc::cli
