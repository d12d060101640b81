#include "adjecc/netlist_sim.hpp"

#include <cctype>

#include "adjecc/errors.hpp"

namespace adjecc {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  for (std::size_t i = 0; i < src.size();) {
    const char ch = src[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      tokens.push_back({std::string(src.substr(i, j - i)), line});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      // Sized constants: 1'b0 / 1'b1.
      if (j + 2 < src.size() && src[j] == '\'' && src[j + 1] == 'b') j += 3;
      tokens.push_back({std::string(src.substr(i, j - i)), line});
      i = j;
    } else if (std::string_view("()[]:,;=^&|~").find(ch) != std::string_view::npos) {
      tokens.push_back({std::string(1, ch), line});
      ++i;
    } else {
      throw parse_error(line, "unexpected character '" + std::string(1, ch) + "'");
    }
  }
  return tokens;
}

class Cursor {
public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool at_end() const { return pos_ >= tokens_.size(); }
  const std::string& peek() const {
    static const std::string eof;
    return at_end() ? eof : tokens_[pos_].text;
  }
  std::size_t line() const { return at_end() ? (tokens_.empty() ? 0 : tokens_.back().line) : tokens_[pos_].line; }

  std::string take() {
    if (at_end()) throw parse_error(line(), "unexpected end of netlist");
    return tokens_[pos_++].text;
  }
  void expect(std::string_view want) {
    const std::size_t l = line();
    const std::string got = take();
    if (got != want) throw parse_error(l, "expected '" + std::string(want) + "', got '" + got + "'");
  }
  bool accept(std::string_view want) {
    if (peek() != want) return false;
    ++pos_;
    return true;
  }
  std::string identifier() {
    const std::size_t l = line();
    std::string id = take();
    if (!(std::isalpha(static_cast<unsigned char>(id[0])) || id[0] == '_'))
      throw parse_error(l, "expected identifier, got '" + id + "'");
    return id;
  }
  std::size_t number() {
    const std::size_t l = line();
    const std::string tok = take();
    std::size_t value = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw parse_error(l, "expected number, got '" + tok + "'");
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
  }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

Netlist Netlist::parse(std::string_view text) {
  Netlist net;
  Cursor in(tokenize(text));

  auto declare = [&](const std::string& name, std::size_t lo, std::size_t width, std::size_t line) {
    if (net.signals_.contains(name)) throw parse_error(line, "signal '" + name + "' declared twice");
    net.signals_[name] = {net.slot_count_, lo, width};
    net.slot_count_ += width;
  };
  auto range = [&](std::size_t& lo, std::size_t& width) {
    lo = 0;
    width = 1;
    if (!in.accept("[")) return;
    const std::size_t line = in.line();
    const std::size_t a = in.number();
    in.expect(":");
    const std::size_t b = in.number();
    in.expect("]");
    if (a > b) throw parse_error(line, "only ascending ranges [lo:hi] are supported");
    lo = a;
    width = b - a + 1;
  };

  in.expect("module");
  net.module_name_ = in.identifier();
  in.expect("(");
  do {
    const std::size_t line = in.line();
    const std::string dir = in.take();
    if (dir != "input" && dir != "output") throw parse_error(line, "expected port direction");
    in.expect("wire");
    std::size_t lo, width;
    range(lo, width);
    const std::string name = in.identifier();
    declare(name, lo, width, line);
    net.ports_.push_back({dir == "input" ? HdlPort::Direction::Input : HdlPort::Direction::Output, name, width});
  } while (in.accept(","));
  in.expect(")");
  in.expect(";");

  std::vector<char> driven(net.slot_count_, 0);
  auto ensure_driven_size = [&] { driven.resize(net.slot_count_, 0); };
  for (const auto& port : net.ports_)
    if (port.direction == HdlPort::Direction::Input) {
      const auto& sig = net.signals_.at(port.name);
      for (std::size_t b = 0; b < sig.width; ++b) driven[sig.base + b] = 1;
    }

  auto lvalue = [&]() {
    const std::size_t line = in.line();
    const std::string name = in.identifier();
    const auto it = net.signals_.find(name);
    if (it == net.signals_.end()) throw parse_error(line, "undeclared signal '" + name + "'");
    const Signal& sig = it->second;
    std::size_t index = sig.lo;
    if (in.accept("[")) {
      index = in.number();
      in.expect("]");
      if (index < sig.lo || index >= sig.lo + sig.width)
        throw parse_error(line, "index out of range for '" + name + "'");
    } else if (sig.width != 1) {
      throw parse_error(line, "vector '" + name + "' used without an index");
    }
    return sig.base + (index - sig.lo);
  };

  while (!in.accept("endmodule")) {
    const std::size_t line = in.line();
    const std::string kw = in.take();
    if (kw == "wire") {
      std::size_t lo, width;
      range(lo, width);
      do declare(in.identifier(), lo, width, line);
      while (in.accept(","));
      in.expect(";");
      ensure_driven_size();
    } else if (kw == "assign") {
      Assign a{lvalue(), 0, {}};
      if (driven[a.target]) throw parse_error(line, "signal bit assigned twice or is an input");
      in.expect("=");
      const std::string& head = in.peek();
      if (head == "1'b0" || head == "1'b1") {
        a.op = head == "1'b1" ? '1' : '0';
        in.take();
      } else {
        for (;;) {
          const bool negate = in.accept("~");
          const std::size_t operand_line = in.line();
          const std::size_t slot = lvalue();
          if (!driven[slot]) throw parse_error(operand_line, "operand used before it is assigned");
          a.operands.push_back({slot, negate});
          const std::string& op = in.peek();
          if (op != "^" && op != "&" && op != "|") break;
          if (a.op != 0 && a.op != op[0]) throw parse_error(in.line(), "mixed operators in one assignment");
          a.op = op[0];
          in.take();
        }
        if (a.op == 0) a.op = '^';
      }
      in.expect(";");
      driven[a.target] = 1;
      net.assigns_.push_back(std::move(a));
    } else {
      throw parse_error(line, "unexpected '" + kw + "'");
    }
  }
  if (!in.at_end()) throw parse_error(in.line(), "content after endmodule");

  for (const auto& port : net.ports_) {
    if (port.direction != HdlPort::Direction::Output) continue;
    const auto& sig = net.signals_.at(port.name);
    for (std::size_t b = 0; b < sig.width; ++b)
      if (!driven[sig.base + b]) throw parse_error(0, "output '" + port.name + "' is not fully driven");
  }
  return net;
}

std::size_t Netlist::operator_count(char op) const {
  std::size_t total = 0;
  for (const auto& a : assigns_)
    if (a.op == op && !a.operands.empty()) total += a.operands.size() - 1;
  return total;
}

std::map<std::string, Netlist::Lanes> Netlist::simulate(const std::map<std::string, Lanes>& inputs) const {
  std::vector<std::uint64_t> value(slot_count_, 0);
  for (const auto& port : ports_) {
    if (port.direction != HdlPort::Direction::Input) continue;
    const auto it = inputs.find(port.name);
    if (it == inputs.end()) throw argument_error("missing input '" + port.name + "'");
    if (it->second.size() != port.width)
      throw argument_error("input '" + port.name + "' expects " + std::to_string(port.width) + " bits");
    const auto& sig = signals_.at(port.name);
    for (std::size_t b = 0; b < port.width; ++b) value[sig.base + b] = it->second[b];
  }

  for (const auto& a : assigns_) {
    std::uint64_t v;
    switch (a.op) {
    case '0': v = 0; break;
    case '1': v = ~std::uint64_t{0}; break;
    case '&': v = ~std::uint64_t{0}; break;
    default: v = 0; break;
    }
    for (const auto& operand : a.operands) {
      const std::uint64_t x = operand.negate ? ~value[operand.slot] : value[operand.slot];
      switch (a.op) {
      case '^': v ^= x; break;
      case '&': v &= x; break;
      case '|': v |= x; break;
      default: break;
      }
    }
    value[a.target] = v;
  }

  std::map<std::string, Lanes> out;
  for (const auto& port : ports_) {
    if (port.direction != HdlPort::Direction::Output) continue;
    const auto& sig = signals_.at(port.name);
    out[port.name] = Lanes(value.begin() + static_cast<std::ptrdiff_t>(sig.base),
                           value.begin() + static_cast<std::ptrdiff_t>(sig.base + sig.width));
  }
  return out;
}

std::map<std::string, BitVec> Netlist::evaluate(const std::map<std::string, BitVec>& inputs) const {
  std::map<std::string, Lanes> lanes;
  for (const auto& [name, bits] : inputs) lanes[name] = pack_lanes({bits});
  std::map<std::string, BitVec> out;
  for (const auto& [name, words] : simulate(lanes)) out[name] = unpack_lane(words, 0);
  return out;
}

Netlist::Lanes pack_lanes(const std::vector<BitVec>& vectors) {
  if (vectors.empty()) return {};
  if (vectors.size() > 64) throw argument_error("at most 64 lanes");
  const std::size_t width = vectors.front().size();
  Netlist::Lanes lanes(width, 0);
  for (std::size_t lane = 0; lane < vectors.size(); ++lane) {
    if (vectors[lane].size() != width) throw argument_error("lane vectors differ in width");
    for (std::size_t b = 0; b < width; ++b)
      if (vectors[lane].test(b + 1)) lanes[b] |= std::uint64_t{1} << lane;
  }
  return lanes;
}

BitVec unpack_lane(const Netlist::Lanes& lanes, std::size_t lane) {
  BitVec v(lanes.size());
  for (std::size_t b = 0; b < lanes.size(); ++b)
    if ((lanes[b] >> lane) & 1U) v.set(b + 1);
  return v;
}

} // namespace adjecc
