#include "adjecc/hdl.hpp"

#include <cctype>
#include <set>

#include "adjecc/constraints.hpp"
#include "adjecc/errors.hpp"

namespace adjecc {

std::string hdl_identifier(const std::string& name) {
  std::string id;
  for (unsigned char ch : name) id += std::isalnum(ch) ? static_cast<char>(ch) : '_';
  if (id.empty() || std::isdigit(static_cast<unsigned char>(id.front()))) id = "code_" + id;
  return id;
}

namespace {

std::string join(const std::vector<std::string>& terms, const char* op) {
  if (terms.empty()) return "1'b0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out += std::string(" ") + op + " " + terms[i];
  return out;
}

std::string bit(const char* vec, std::size_t j) { return std::string(vec) + "[" + std::to_string(j) + "]"; }

std::string header(const HdlArtifact& artifact, const std::string& comment) {
  std::string out = "// " + comment + "\nmodule " + artifact.module_name + " (\n";
  for (std::size_t i = 0; i < artifact.ports.size(); ++i) {
    const auto& port = artifact.ports[i];
    out += port.direction == HdlPort::Direction::Input ? "  input  wire " : "  output wire ";
    if (port.width > 1) out += "[1:" + std::to_string(port.width) + "] ";
    out += port.name + (i + 1 < artifact.ports.size() ? ",\n" : "\n");
  }
  return out + ");\n";
}

bool is_indexed(const std::string& name, char prefix, std::size_t limit, std::size_t& index) {
  if (name.size() < 2 || name[0] != prefix) return false;
  std::size_t value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    value = value * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  if (value == 0 || value > limit) return false;
  index = value;
  return true;
}

} // namespace

HdlArtifact emit_encoder(const CodeSpec& spec, const XorProgram& program) {
  const XorProgram reference = extract_program(spec, ProgramSide::Encoder);
  if (program.inputs != reference.inputs || program.outputs != reference.outputs)
    throw argument_error("program inputs/outputs do not match the code's i1..i" +
                         std::to_string(spec.k()) + " / p1..p" + std::to_string(spec.r()));
  if (flatten(program) != flatten(reference))
    throw argument_error("program does not compute the code's parity equations");

  // Temporaries keep their program names; they must not shadow port or
  // vector names.
  static const std::set<std::string> reserved = {"i", "c", "p", "s", "m", "hit", "flip"};
  std::vector<std::string> temps;
  for (const auto& node : program.nodes) {
    std::size_t j = 0;
    if (is_indexed(node.name, 'p', spec.r(), j)) continue;
    const bool ok = !reserved.contains(node.name) &&
                    !std::isdigit(static_cast<unsigned char>(node.name.front())) &&
                    hdl_identifier(node.name) == node.name;
    if (!ok) throw argument_error("temporary '" + node.name + "' is not a usable HDL identifier");
    temps.push_back(node.name);
  }
  auto signal = [&](const std::string& name) {
    std::size_t j = 0;
    if (is_indexed(name, 'i', spec.k(), j)) return bit("i", j);
    if (is_indexed(name, 'p', spec.r(), j)) return bit("p", j);
    return name;
  };

  HdlArtifact artifact;
  artifact.module_name = hdl_identifier(spec.name()) + "_encoder";
  artifact.ports = {{HdlPort::Direction::Input, "i", spec.k()}, {HdlPort::Direction::Output, "c", spec.n()}};

  std::string text = header(artifact, spec.name() + " encoder: " + std::to_string(spec.k()) +
                                          " message bits -> " + std::to_string(spec.n()) +
                                          "-bit codeword");
  text += "  wire [1:" + std::to_string(spec.r()) + "] p;\n";
  for (const auto& t : temps) text += "  wire " + t + ";\n";
  for (const auto& node : program.nodes) {
    std::vector<std::string> terms;
    for (const auto& term : node.terms) terms.push_back(signal(term));
    text += "  assign " + signal(node.name) + " = " + join(terms, "^") + ";\n";
  }
  for (std::size_t pos = 1; pos <= spec.n(); ++pos) {
    const BitRole& role = spec.layout()[pos - 1];
    text += "  assign " + bit("c", pos) + " = " +
            bit(role.kind == BitRole::Kind::Info ? "i" : "p", role.index) + ";\n";
  }
  text += "endmodule\n";
  artifact.text = std::move(text);
  return artifact;
}

HdlArtifact emit_decoder(const CodeSpec& spec) {
  require_capability(spec.matrix(), spec.capability());
  const std::size_t n = spec.n(), k = spec.k(), r = spec.r();
  const auto patterns = correctable_patterns(n, spec.capability());
  const auto columns = spec.matrix().columns();

  HdlArtifact artifact;
  artifact.module_name = hdl_identifier(spec.name()) + "_decoder";
  artifact.ports = {{HdlPort::Direction::Input, "c", n},
                    {HdlPort::Direction::Output, "m", k},
                    {HdlPort::Direction::Output, "corrected", 1},
                    {HdlPort::Direction::Output, "uncorrectable", 1}};

  std::string text = header(artifact, spec.name() + " decoder: " + std::to_string(n) +
                                          "-bit word -> " + std::to_string(k) +
                                          " message bits, " + std::to_string(patterns.size()) +
                                          " correctable bursts");
  text += "  wire [1:" + std::to_string(r) + "] s;\n";
  text += "  wire [1:" + std::to_string(patterns.size()) + "] hit;\n";
  text += "  wire [1:" + std::to_string(n) + "] flip;\n";
  text += "  wire nonzero;\n";

  for (std::size_t i = 1; i <= r; ++i) {
    std::vector<std::string> terms;
    const BitVec& row = spec.matrix().row(i);
    for (std::size_t j = 1; j <= n; ++j)
      if (row.test(j)) terms.push_back(bit("c", j));
    text += "  assign " + bit("s", i) + " = " + join(terms, "^") + ";\n";
  }

  std::vector<std::vector<std::string>> flips(n + 1);
  std::vector<std::string> hits;
  std::size_t width = 0;
  for (std::size_t h = 1; h <= patterns.size(); ++h) {
    const ErrorPattern& p = patterns[h - 1];
    if (p.width != width) {
      width = p.width;
      text += "  // bursts of width " + std::to_string(width) + "\n";
    }
    const BitVec syndrome = pattern_syndrome(columns, p);
    std::vector<std::string> terms;
    for (std::size_t i = 1; i <= r; ++i) terms.push_back((syndrome.test(i) ? "" : "~") + bit("s", i));
    text += "  assign " + bit("hit", h) + " = " + join(terms, "&") + ";\n";
    hits.push_back(bit("hit", h));
    for (std::size_t pos = p.start; pos < p.start + p.width; ++pos) flips[pos].push_back(bit("hit", h));
  }

  for (std::size_t pos = 1; pos <= n; ++pos)
    text += "  assign " + bit("flip", pos) + " = " + join(flips[pos], "|") + ";\n";
  for (std::size_t j = 1; j <= k; ++j) {
    const std::size_t pos = spec.info_position(j);
    text += "  assign " + bit("m", j) + " = " + bit("c", pos) + " ^ " + bit("flip", pos) + ";\n";
  }
  std::vector<std::string> syndrome_bits;
  for (std::size_t i = 1; i <= r; ++i) syndrome_bits.push_back(bit("s", i));
  text += "  assign nonzero = " + join(syndrome_bits, "|") + ";\n";
  text += "  assign corrected = " + join(hits, "|") + ";\n";
  text += "  assign uncorrectable = nonzero & ~corrected;\n";
  text += "endmodule\n";
  artifact.text = std::move(text);
  return artifact;
}

} // namespace adjecc
