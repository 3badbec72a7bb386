#include "ldt/feasible_set.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ldt/report.hpp"

namespace ldt {

bool CostDomain::all_free() const {
  for (Sign s : signs)
    if (s != Sign::Free) return false;
  return true;
}

CostDomain CostDomain::all(int n, Sign s) {
  CostDomain d;
  d.signs.assign(static_cast<size_t>(n), s);
  return d;
}

std::string domain_string(const CostDomain& d) {
  std::string out;
  for (size_t i = 0; i < d.signs.size(); ++i) {
    if (i) out += ' ';
    switch (d.signs[i]) {
      case Sign::Free: out += "free"; break;
      case Sign::Positive: out += '+'; break;
      case Sign::Negative: out += '-'; break;
    }
  }
  return out;
}

void write_set_text(std::ostream& os, const FeasibleSet& set, const CostDomain& domain) {
  os << set.n << ' ' << set.size() << '\n';
  for (const IntVec& p : set.points) {
    for (int j = 0; j < set.n; ++j) {
      if (j) os << ' ';
      os << p[j];
    }
    os << '\n';
  }
  if (!domain.all_free()) os << "domain " << domain_string(domain) << '\n';
}

std::string set_text(const FeasibleSet& set, const CostDomain& domain) {
  std::ostringstream os;
  write_set_text(os, set, domain);
  return os.str();
}

ParsedSet parse_set_text(std::istream& is) {
  ParsedSet out;
  std::string line;
  int lineno = 0;
  if (!std::getline(is, line)) throw std::runtime_error("parse error: empty input");
  ++lineno;
  int n = 0, m = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 1 || m < 0)
      throw std::runtime_error("parse error: line 1: expected header 'n m'");
    std::string extra;
    if (hs >> extra) throw std::runtime_error("parse error: line 1: trailing tokens");
  }
  out.set.n = n;
  out.domain = CostDomain::free_orthant(n);
  std::map<std::string, int> seen;  // canonical row text -> line number
  std::string dup_err, ragged_err;
  for (int r = 0; r < m; ++r) {
    if (!std::getline(is, line))
      throw std::runtime_error("parse error: expected " + std::to_string(m) +
                               " rows, file ends at row " + std::to_string(r));
    ++lineno;
    std::istringstream rs(line);
    IntVec p;
    std::string tok;
    while (rs >> tok) {
      try {
        p.emplace_back(tok);
      } catch (const std::exception&) {
        throw std::runtime_error("parse error: line " + std::to_string(lineno) +
                                 ": bad integer '" + tok + "'");
      }
    }
    if (static_cast<int>(p.size()) != n) {
      if (!ragged_err.empty()) ragged_err += ", ";
      ragged_err += "line " + std::to_string(lineno);
      continue;
    }
    std::string key;
    for (const Int& x : p) key += x.str() + " ";
    auto [it, inserted] = seen.emplace(key, lineno);
    if (!inserted) {
      if (!dup_err.empty()) dup_err += ", ";
      dup_err += "line " + std::to_string(lineno) + " repeats line " + std::to_string(it->second);
      continue;
    }
    out.set.points.push_back(std::move(p));
  }
  if (!ragged_err.empty())
    throw std::runtime_error("parse error: ragged rows: " + ragged_err);
  if (!dup_err.empty())
    throw std::runtime_error("parse error: duplicate points: " + dup_err);
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream rs(line);
    std::string head;
    if (!(rs >> head)) continue;  // blank line
    if (head != "domain")
      throw std::runtime_error("parse error: line " + std::to_string(lineno) +
                               ": unexpected content '" + head + "'");
    std::vector<Sign> signs;
    std::string tok;
    while (rs >> tok) {
      if (tok == "+")
        signs.push_back(Sign::Positive);
      else if (tok == "-")
        signs.push_back(Sign::Negative);
      else if (tok == "free" || tok == "0")
        signs.push_back(Sign::Free);
      else
        throw std::runtime_error("parse error: line " + std::to_string(lineno) +
                                 ": bad domain token '" + tok + "'");
    }
    if (static_cast<int>(signs.size()) != n)
      throw std::runtime_error("parse error: line " + std::to_string(lineno) +
                               ": domain has " + std::to_string(signs.size()) +
                               " tokens, expected " + std::to_string(n));
    out.domain.signs = std::move(signs);
  }
  return out;
}

bool is_binary(const FeasibleSet& set) {
  for (const IntVec& p : set.points)
    for (const Int& x : p)
      if (x != 0 && x != 1) return false;
  return true;
}

uint64_t content_hash(const FeasibleSet& set, const CostDomain& domain) {
  return fnv1a64(set_text(set, domain));
}

}  // namespace ldt
