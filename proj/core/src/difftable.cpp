#include "g2calc/difftable.hpp"

#include "g2calc/error.hpp"

namespace g2calc {

void DiffTable::set(const std::string& generator, Form d) {
  if (cf_->index_of(generator) < 0) fail("unknown generator '" + generator + "'");
  if (!d.coframe()->same_as(*cf_)) fail("differential of '" + generator + "' lives on another coframe");
  entries_.insert_or_assign(generator, std::move(d));
}

const Form& DiffTable::at(const std::string& generator) const {
  auto it = entries_.find(generator);
  if (it == entries_.end())
    fail("differential of generator '" + generator + "' is unavailable");
  return it->second;
}

Form dform(const DiffTable& table, const Form& form, const WedgeFn& wedge) {
  const WedgeFn w = wedge ? wedge : WedgeFn(&Form::wedge_pure);
  const auto& cf = table.coframe();
  if (!cf->same_as(*form.coframe())) fail("dform: form lives on another coframe");
  Form out(form.coframe());
  for (const auto& [m, c] : form.terms()) {
    int prefix_degree = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
      const std::size_t idx = static_cast<std::size_t>(m[k]);
      const std::string& gname = cf->name(idx);
      const Form& dg = table.at(gname);
      Form prefix(form.coframe());
      prefix.add_term(Form::Monomial(m.begin(), m.begin() + static_cast<long>(k)),
                      Scalar(Rational(1)));
      Form suffix(form.coframe());
      suffix.add_term(Form::Monomial(m.begin() + static_cast<long>(k) + 1, m.end()),
                      Scalar(Rational(1)));
      Form piece = w(w(prefix, dg), suffix).scaled(c);
      if (prefix_degree % 2 != 0) piece = -piece;
      out += piece;
      prefix_degree += cf->degree(idx);
    }
  }
  return out;
}

DSquaredReport d_squared_check(const DiffTable& table, const WedgeFn& wedge) {
  DSquaredReport report;
  const auto& cf = table.coframe();
  for (std::size_t i = 0; i < cf->size(); ++i) {
    const std::string& g = cf->name(i);
    if (!table.has(g)) {
      report.skipped.push_back(g);
      continue;
    }
    const Form& dg = table.at(g);
    bool computable = true;
    for (const auto& [m, c] : dg.terms()) {
      for (const auto idx : m) {
        if (!table.has(cf->name(static_cast<std::size_t>(idx)))) {
          computable = false;
          break;
        }
      }
      if (!computable) break;
    }
    if (!computable) {
      report.skipped.push_back(g);
      continue;
    }
    Form residual = dform(table, dg, wedge);
    report.checked.push_back(g);
    if (!residual.is_zero() && !report.failure)
      report.failure = DSquaredFailure{g, std::move(residual)};
  }
  return report;
}

}  // namespace g2calc
