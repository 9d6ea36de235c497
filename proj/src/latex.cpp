#include "vvmacd/latex.hpp"

#include <sstream>

namespace vvmacd {

namespace {

void append_monomial(std::ostringstream& os, int dq, int dt,
                     const mpz_class& c, bool first) {
  mpz_class a = c;
  if (first) {
    if (a < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  const bool bare = dq == 0 && dt == 0;
  if (a != 1 || bare) os << a.get_str();
  if (dq > 0) {
    os << "q";
    if (dq > 1) os << "^{" << dq << "}";
  }
  if (dt > 0) {
    os << "t";
    if (dt > 1) os << "^{" << dt << "}";
  }
}

std::string wrap_coeff(const RatQT& c) {
  if (c.is_one()) return "";
  std::string body = latex_of(c);
  bool simple = c.den().is_one() && c.num().terms().size() == 1;
  if (simple && c.num().lead_coeff() > 0) return body + "\\,";
  if (c.den().is_one()) return "\\left(" + body + "\\right)";
  return body + "\\,";
}

std::string join_rows(const std::vector<std::string>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += "|";
    out += rows[i];
  }
  return out;
}

std::string int_row(const std::vector<int>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += "\\,";
    out += std::to_string(row[i]);
  }
  return out;
}

}  // namespace

std::string latex_of(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    append_monomial(os, it->first.first, it->first.second, it->second, first);
    first = false;
  }
  return os.str();
}

std::string latex_of(const RatQT& f) {
  if (f.den().is_one()) return latex_of(f.num());
  return "\\frac{" + latex_of(f.num()) + "}{" + latex_of(f.den()) + "}";
}

std::string latex_of(const TSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (long e = s.val(); e <= s.hi(); ++e) {
    RatQT c = s.at(e);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string body = latex_of(c);
    if (c.den().is_one() && c.num().terms().size() <= 1 && e != 0) {
      if (!c.is_one()) os << body << "\\,";
    } else if (e != 0) {
      os << "\\left(" << body << "\\right)";
    } else {
      os << body;
    }
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^{" << e << "}";
    }
  }
  if (first) os << "0";
  os << " + O\\!\\left(t^{" << s.hi() + 1 << "}\\right)";
  return os.str();
}

std::string latex_rows(const Ryt& T) {
  std::vector<std::string> rows;
  for (const auto& row : T.rows()) rows.push_back(int_row(row));
  return join_rows(rows);
}

std::string latex_rows(const Syt& s) {
  std::vector<std::string> rows;
  for (const auto& row : s.rows()) rows.push_back(int_row(row));
  return join_rows(rows);
}

std::string latex_rows(const Psyt& tau) {
  std::vector<std::string> rows;
  for (const auto& row : tau.rows()) {
    std::string r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) r += "\\,";
      r += std::to_string(row[i].label);
      if (row[i].power == 1) r += "q";
      if (row[i].power > 1) r += "q^{" + std::to_string(row[i].power) + "}";
    }
    rows.push_back(std::move(r));
  }
  return join_rows(rows);
}

std::string latex_rows(const AsymLabelling& T) {
  int rk = T.rank();
  if (rk == 0) return "\\varnothing";
  return latex_rows(T.restrict(rk)) + "|0\\cdots";
}

std::string latex_of(const VElement& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, part] : v.fibers())
    for (const auto& [tau, c] : part.terms()) {
      if (!first) os << " + ";
      first = false;
      os << wrap_coeff(c) << "X^{(";
      for (std::size_t i = 0; i < alpha.size(); ++i)
        os << (i ? "," : "") << alpha[i];
      os << ")}\\otimes e_{" << latex_rows(tau) << "}";
    }
  return os.str();
}

std::string latex_of(const MacdonaldP& P) {
  std::ostringstream os;
  os << "P_{" << latex_rows(P.labelling) << "} = ";
  bool first = true;
  for (const auto& [tau, c] : P.f_expansion) {
    if (!first) os << " + ";
    first = false;
    os << wrap_coeff(c) << "F_{" << latex_rows(tau) << "}";
  }
  return os.str();
}

std::string latex_of(const PieriRow& row) {
  std::ostringstream os;
  os << "e_{" << row.r << "}\\,P_{" << latex_rows(row.source) << "} = ";
  bool first = true;
  for (const auto& [target, c] : row.entries) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << wrap_coeff(c) << "P_{" << latex_rows(target) << "}";
  }
  if (first) os << "0";
  return os.str();
}

std::string latex_of(const StablePieriRow& row) {
  std::ostringstream os;
  os << "e_{" << row.r << "}\\,P_{" << latex_rows(row.source) << "} = ";
  bool first = true;
  for (const auto& [target, c] : row.entries) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << wrap_coeff(c) << "P_{" << latex_rows(target) << "}";
  }
  if (first) os << "0";
  return os.str();
}

std::string latex_of(const IdentityReport& rep) {
  std::ostringstream os;
  auto side = [&](const std::variant<RatQT, TSeries>& s) {
    if (std::holds_alternative<RatQT>(s)) return latex_of(std::get<RatQT>(s));
    return latex_of(std::get<TSeries>(s));
  };
  os << side(rep.lhs) << " = " << side(rep.rhs) << " % "
     << (rep.verdict ? "verified" : "FAILED");
  return os.str();
}

}  // namespace vvmacd
