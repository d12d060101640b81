#include "adjecc/xor_network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "adjecc/errors.hpp"

namespace adjecc {

namespace {

std::size_t ceil_log2(std::size_t x) {
  std::size_t levels = 0;
  while ((std::size_t{1} << levels) < x) ++levels;
  return levels;
}

// Name -> slot, inputs first then nodes in list order.
std::unordered_map<std::string, std::size_t> slot_index(const XorProgram& program) {
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& name : program.inputs) index.emplace(name, index.size());
  for (const auto& node : program.nodes) index.emplace(node.name, index.size());
  return index;
}

// Sorted terms with pairs of duplicates removed (x ^ x = 0).
std::vector<std::size_t> cancel_pairs(std::vector<std::size_t> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<std::size_t> out;
  for (auto t : terms) {
    if (!out.empty() && out.back() == t)
      out.pop_back();
    else
      out.push_back(t);
  }
  return out;
}

} // namespace

XorProgram extract_program(const CodeSpec& spec, ProgramSide side) {
  XorProgram program;
  if (side == ProgramSide::Encoder) {
    for (std::size_t j = 1; j <= spec.k(); ++j) program.inputs.push_back("i" + std::to_string(j));
    const auto gen = spec.parity_generator();
    for (std::size_t t = 1; t <= spec.r(); ++t) {
      XorNode node{"p" + std::to_string(t), {}};
      for (std::size_t j = 1; j <= spec.k(); ++j)
        if (gen[t - 1].test(j)) node.terms.push_back("i" + std::to_string(j));
      program.outputs.push_back(node.name);
      program.nodes.push_back(std::move(node));
    }
  } else {
    for (std::size_t j = 1; j <= spec.n(); ++j) program.inputs.push_back("c" + std::to_string(j));
    for (std::size_t i = 1; i <= spec.r(); ++i) {
      XorNode node{"s" + std::to_string(i), {}};
      const BitVec& row = spec.matrix().row(i);
      for (std::size_t j = 1; j <= spec.n(); ++j)
        if (row.test(j)) node.terms.push_back("c" + std::to_string(j));
      program.outputs.push_back(node.name);
      program.nodes.push_back(std::move(node));
    }
  }
  return program;
}

void validate(const XorProgram& program) {
  std::set<std::string> defined;
  for (const auto& name : program.inputs)
    if (!defined.insert(name).second) throw argument_error("duplicate input '" + name + "'");
  std::set<std::string> node_names;
  for (const auto& node : program.nodes) {
    for (const auto& term : node.terms)
      if (!defined.contains(term))
        throw argument_error("node '" + node.name + "' references '" + term +
                             "' before it is defined");
    if (!defined.insert(node.name).second) throw argument_error("duplicate signal '" + node.name + "'");
    node_names.insert(node.name);
  }
  for (const auto& out : program.outputs)
    if (!node_names.contains(out)) throw argument_error("output '" + out + "' is not a node");
}

std::vector<std::vector<std::size_t>> flatten(const XorProgram& program) {
  validate(program);
  const std::size_t inputs = program.inputs.size();
  const auto index = slot_index(program);
  std::vector<std::vector<char>> expanded(inputs + program.nodes.size(), std::vector<char>(inputs, 0));
  for (std::size_t i = 0; i < inputs; ++i) expanded[i][i] = 1;
  for (std::size_t n = 0; n < program.nodes.size(); ++n) {
    auto& acc = expanded[inputs + n];
    for (const auto& term : program.nodes[n].terms) {
      const auto& src = expanded[index.at(term)];
      for (std::size_t i = 0; i < inputs; ++i) acc[i] ^= src[i];
    }
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& name : program.outputs) {
    const auto& bits = expanded[index.at(name)];
    std::vector<std::size_t> terms;
    for (std::size_t i = 0; i < inputs; ++i)
      if (bits[i]) terms.push_back(i);
    out.push_back(std::move(terms));
  }
  return out;
}

namespace {

XorProgram greedy_pair(const XorProgram& program) {
  validate(program);
  // Signals by declaration id: inputs, original nodes, then new temps.
  std::vector<std::string> names = program.inputs;
  std::set<std::string> taken(names.begin(), names.end());
  std::unordered_map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < names.size(); ++i) id[names[i]] = i;

  struct WorkNode {
    std::size_t id;
    std::vector<std::size_t> terms;
  };
  std::vector<WorkNode> order;
  for (const auto& node : program.nodes) {
    std::vector<std::size_t> terms;
    for (const auto& t : node.terms) terms.push_back(id.at(t));
    id[node.name] = names.size();
    names.push_back(node.name);
    taken.insert(node.name);
    order.push_back({id[node.name], cancel_pairs(std::move(terms))});
  }

  std::size_t temp_counter = 0;
  bool extracted = false;
  for (;;) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
    for (const auto& node : order)
      for (std::size_t a = 0; a < node.terms.size(); ++a)
        for (std::size_t b = a + 1; b < node.terms.size(); ++b) ++counts[{node.terms[a], node.terms[b]}];

    std::pair<std::size_t, std::size_t> best{};
    std::size_t best_count = 1;
    for (const auto& [pair, count] : counts)
      if (count > best_count) {
        best = pair;
        best_count = count;
      }
    if (best_count < 2) break;
    extracted = true;

    std::string temp;
    do temp = "t" + std::to_string(++temp_counter);
    while (taken.contains(temp));
    taken.insert(temp);
    const std::size_t temp_id = names.size();
    names.push_back(temp);

    std::size_t first_user = order.size();
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto& terms = order[i].terms;
      const bool has_a = std::binary_search(terms.begin(), terms.end(), best.first);
      const bool has_b = std::binary_search(terms.begin(), terms.end(), best.second);
      if (!has_a || !has_b) continue;
      if (first_user == order.size()) first_user = i;
      std::erase(terms, best.first);
      std::erase(terms, best.second);
      terms.insert(std::upper_bound(terms.begin(), terms.end(), temp_id), temp_id);
    }
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(first_user),
                 WorkNode{temp_id, {best.first, best.second}});
  }

  // Nothing shared: keep the caller's term order so a second pass is a no-op.
  if (!extracted) {
    XorProgram out = program;
    for (auto& node : out.nodes) {
      std::map<std::string, std::size_t> seen;
      for (const auto& t : node.terms) ++seen[t];
      std::vector<std::string> kept;
      for (const auto& t : node.terms)
        if (seen[t] % 2 == 1 && std::find(kept.begin(), kept.end(), t) == kept.end()) kept.push_back(t);
      node.terms = std::move(kept);
    }
    return out;
  }

  XorProgram out;
  out.inputs = program.inputs;
  out.outputs = program.outputs;
  for (const auto& node : order) {
    XorNode x{names[node.id], {}};
    for (auto t : node.terms) x.terms.push_back(names[t]);
    out.nodes.push_back(std::move(x));
  }
  return out;
}

XorProgram hand_shared(const XorProgram& program) {
  const CodeSpec builtin = builtin_2316();
  const XorProgram reference = extract_program(builtin, ProgramSide::Encoder);
  if (program.inputs != reference.inputs || program.outputs != reference.outputs ||
      flatten(program) != flatten(reference))
    throw unsupported_policy("HandShared applies only to the built-in (23,16) encoder program");

  XorProgram out;
  out.inputs = reference.inputs;
  out.outputs = reference.outputs;
  for (const auto& eq : builtin_2316_shared_equations()) {
    XorNode node{"p" + std::to_string(eq.parity), {}};
    for (auto j : eq.info_terms) node.terms.push_back("i" + std::to_string(j));
    if (eq.parity_term) node.terms.push_back("p" + std::to_string(*eq.parity_term));
    out.nodes.push_back(std::move(node));
  }
  return out;
}

} // namespace

XorProgram optimize_cse(const XorProgram& program, CsePolicy policy) {
  XorProgram out = policy == CsePolicy::GreedyPair ? greedy_pair(program) : hand_shared(program);
  if (flatten(out) != flatten(program))
    throw std::logic_error("CSE changed the program's function");
  return out;
}

CostReport cost(const XorProgram& program) {
  validate(program);
  const auto index = slot_index(program);
  const std::size_t inputs = program.inputs.size();
  std::vector<std::size_t> depth(inputs + program.nodes.size(), 0);

  CostReport report;
  for (std::size_t n = 0; n < program.nodes.size(); ++n) {
    const auto& node = program.nodes[n];
    std::size_t deepest = 0;
    for (const auto& term : node.terms) deepest = std::max(deepest, depth[index.at(term)]);
    depth[inputs + n] = deepest + ceil_log2(node.terms.size());
    if (node.terms.size() > 1) report.xor2_count += node.terms.size() - 1;
  }

  const auto flat = flatten(program);
  for (std::size_t o = 0; o < program.outputs.size(); ++o) {
    const std::size_t slot = index.at(program.outputs[o]);
    const auto& node = program.nodes[slot - inputs];
    report.outputs.push_back({node.name, node.terms.size(), flat[o].size(), depth[slot]});
    report.depth = std::max(report.depth, depth[slot]);
  }
  return report;
}

std::string render_program(const XorProgram& program) {
  std::string out;
  for (const auto& node : program.nodes) {
    out += node.name + " =";
    if (node.terms.empty()) out += " 0";
    for (std::size_t i = 0; i < node.terms.size(); ++i) out += (i ? " ^ " : " ") + node.terms[i];
    out += "\n";
  }
  return out;
}

XorEvaluator::XorEvaluator(const XorProgram& program) : input_count_(program.inputs.size()) {
  validate(program);
  const auto index = slot_index(program);
  for (const auto& node : program.nodes) {
    std::vector<std::size_t> ops;
    for (const auto& term : node.terms) ops.push_back(index.at(term));
    operands_.push_back(std::move(ops));
  }
  for (const auto& name : program.outputs) output_slots_.push_back(index.at(name));
}

BitVec XorEvaluator::operator()(const BitVec& inputs) const {
  if (inputs.size() != input_count_)
    throw argument_error("evaluator expects " + std::to_string(input_count_) + " input bits");
  std::vector<char> value(input_count_ + operands_.size(), 0);
  for (std::size_t i = 0; i < input_count_; ++i) value[i] = inputs.test(i + 1);
  for (std::size_t n = 0; n < operands_.size(); ++n) {
    char v = 0;
    for (auto op : operands_[n]) v ^= value[op];
    value[input_count_ + n] = v;
  }
  BitVec out(output_slots_.size());
  for (std::size_t o = 0; o < output_slots_.size(); ++o)
    if (value[output_slots_[o]]) out.set(o + 1);
  return out;
}

} // namespace adjecc
