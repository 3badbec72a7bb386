#include "ldt/codegen.hpp"

#include <sstream>
#include <stdexcept>

namespace ldt {

namespace {

void emit_expr(std::ostringstream& os, const IntVec& normal) {
  bool first = true;
  for (size_t i = 0; i < normal.size(); ++i) {
    const Int& k = normal[i];
    if (k == 0) continue;
    const bool negative = k < 0;
    const Int mag = boost::multiprecision::abs(k);
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1) os << mag << " * ";
    os << "c[" << i << "]";
  }
  if (first) throw std::invalid_argument("emit_flat_source: zero branch normal");
}

void emit_node(std::ostringstream& os, const LdtPolicy& p, int32_t id, int level) {
  const std::string ind(static_cast<size_t>(level) * 4, ' ');
  const LdtPolicy::Node& nd = p.nodes[id];
  if (nd.leaf) {
    os << ind << "static int x[N] = {";
    for (int j = 0; j < p.dim; ++j) {
      if (j) os << ", ";
      os << nd.vec[j];
    }
    os << "};\n" << ind << "return x;\n";
    return;
  }
  os << ind << "if (";
  emit_expr(os, nd.vec);
  os << " < 0.0) {\n";
  emit_node(os, p, nd.lo, level + 1);
  os << ind << "} else {\n";
  emit_node(os, p, nd.hi, level + 1);
  os << ind << "}\n";
}

}  // namespace

std::string emit_flat_source(const LdtPolicy& policy) {
  std::ostringstream os;
  os << "#define N " << policy.dim << "   // problem dimension\n\n";
  os << "static const int *query(double *c) {\n";
  emit_node(os, policy, policy.root, 1);
  os << "}\n";
  return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\n' || s[pos] == '\t')) ++pos;
}

void expect(const std::string& s, size_t& pos, const std::string& lit) {
  skip_ws(s, pos);
  if (s.compare(pos, lit.size(), lit) != 0)
    throw std::runtime_error("flat source parse: expected '" + lit + "' at offset " +
                             std::to_string(pos));
  pos += lit.size();
}

bool peek(const std::string& s, size_t pos, const std::string& lit) {
  skip_ws(s, pos);
  return s.compare(pos, lit.size(), lit) == 0;
}

long long parse_ll(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t end = pos;
  if (end < s.size() && s[end] == '-') ++end;
  while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
  if (end == pos) throw std::runtime_error("flat source parse: expected integer");
  const long long v = std::stoll(s.substr(pos, end - pos));
  pos = end;
  return v;
}

}  // namespace

FlatInterpreter::FlatInterpreter(const std::string& source) {
  size_t pos = 0;
  expect(source, pos, "#define N");
  dim_ = static_cast<int>(parse_ll(source, pos));
  expect(source, pos, "// problem dimension");
  expect(source, pos, "static const int *query(double *c) {");
  root_ = parse_block(source, pos);
  expect(source, pos, "}");
}

int FlatInterpreter::parse_block(const std::string& src, size_t& pos) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  skip_ws(src, pos);
  if (peek(src, pos, "if (")) {
    expect(src, pos, "if (");
    std::vector<std::pair<int, long long>> terms;
    long long sign = 1, coeff = 1;
    for (;;) {
      skip_ws(src, pos);
      if (src.compare(pos, 2, "< ") == 0 || src.compare(pos, 1, "<") == 0) break;
      if (src[pos] == '+') {
        sign = 1;
        ++pos;
        continue;
      }
      if (src[pos] == '-' && pos + 1 < src.size() && src[pos + 1] == ' ') {
        sign = -1;
        ++pos;
        continue;
      }
      if (src[pos] == '*') {
        ++pos;
        continue;
      }
      if (src[pos] == '-' && src.compare(pos + 1, 2, "c[") == 0) {
        sign = -sign;
        ++pos;
        continue;
      }
      if (src.compare(pos, 2, "c[") == 0) {
        pos += 2;
        const int idx = static_cast<int>(parse_ll(src, pos));
        expect(src, pos, "]");
        terms.emplace_back(idx, sign * coeff);
        sign = 1;
        coeff = 1;
        continue;
      }
      coeff = parse_ll(src, pos);
      if (coeff < 0) {
        sign = -sign;
        coeff = -coeff;
      }
    }
    expect(src, pos, "< 0.0) {");
    const int lo = parse_block(src, pos);
    expect(src, pos, "} else {");
    const int hi = parse_block(src, pos);
    expect(src, pos, "}");
    nodes_[id].terms = std::move(terms);
    nodes_[id].lo = lo;
    nodes_[id].hi = hi;
    return id;
  }
  expect(src, pos, "static int x[N] = {");
  std::vector<int> sol;
  for (;;) {
    sol.push_back(static_cast<int>(parse_ll(src, pos)));
    skip_ws(src, pos);
    if (src[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(src, pos, "};");
  expect(src, pos, "return x;");
  nodes_[id].leaf = true;
  nodes_[id].solution = std::move(sol);
  return id;
}

std::vector<int> FlatInterpreter::run(const std::vector<double>& c) const {
  if (static_cast<int>(c.size()) != dim_)
    throw std::invalid_argument("FlatInterpreter: dimension mismatch");
  int cur = root_;
  while (!nodes_[cur].leaf) {
    double v = 0.0;
    for (const auto& [idx, k] : nodes_[cur].terms) v += static_cast<double>(k) * c[idx];
    cur = v < 0.0 ? nodes_[cur].lo : nodes_[cur].hi;
  }
  return nodes_[cur].solution;
}

}  // namespace ldt
