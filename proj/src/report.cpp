#include "grp/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "grp/error.hpp"
#include "grp/radicals.hpp"

namespace grp {
namespace {

std::string classes_text(const GroupClasses& c) {
  std::string s;
  auto add = [&](bool b, const char* n) {
    if (!b) return;
    if (!s.empty()) s += ", ";
    s += n;
  };
  add(c.nilpotent, "nilpotent");
  add(c.quasinilpotent, "quasinilpotent");
  add(c.soluble, "soluble");
  add(c.supersoluble, "supersoluble");
  return "classes: " + (s.empty() ? "none" : s);
}

void fill_orders(ReportRecord& rec, const RadicalReport& r) {
  rec.phi = r.phi.order();
  rec.fit = r.fit.order();
  rec.fstar = r.fstar.order();
  rec.ftilde = r.ftilde.order();
  rec.ftilde_inf = r.ftilde_inf.order();
  rec.stab_index = r.tower.stabilization_index;
}

std::vector<ReportRecord> run_group(const PreparedGroup& pg,
                                    const std::vector<const CheckDef*>& selected,
                                    const Budget& budget) {
  std::vector<ReportRecord> rows;
  rows.reserve(selected.size() + 1);
  ReportRecord base;
  base.group = pg.name;
  base.order = pg.table->order;

  GroupContext ctx(pg.name, pg.table, budget, pg.tags, pg.split);
  bool radicals_ok = true;
  ReportRecord rad = base;
  rad.check_id = "radicals";
  try {
    const RadicalReport& r = ctx.radicals();
    fill_orders(base, r);
    fill_orders(rad, r);
    rad.witness = classes_text(r.classes);
  } catch (const BudgetExceeded& e) {
    rad.status = CheckStatus::Skipped;
    rad.witness = e.what();
    radicals_ok = false;
  } catch (const std::exception& e) {
    rad.status = CheckStatus::Fails;
    rad.witness = e.what();
    rad.internal = true;
    radicals_ok = false;
  }
  rows.push_back(rad);

  for (const CheckDef* d : selected) {
    ReportRecord rec = base;
    rec.check_id = d->id;
    rec.probe = d->probe;
    if (!radicals_ok) {
      rec.status = CheckStatus::Skipped;
      rec.witness = "radical computation failed";
      rows.push_back(rec);
      continue;
    }
    try {
      Verdict v = d->run(ctx);
      rec.status = v.status;
      rec.witness = v.witness;
    } catch (const BudgetExceeded& e) {
      rec.status = CheckStatus::Skipped;
      rec.witness = e.what();
    } catch (const std::exception& e) {
      rec.status = CheckStatus::Fails;
      rec.witness = e.what();
      rec.internal = true;
    }
    rows.push_back(rec);
  }
  return rows;
}

std::string escape_witness(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const std::vector<PreparedGroup>& corpus, const SuiteOptions& opts) {
  std::vector<const CheckDef*> selected;
  if (opts.checks.empty()) {
    for (const CheckDef& d : check_registry()) selected.push_back(&d);
  } else {
    for (const std::string& id : opts.checks) {
      const CheckDef* d = find_check(id);
      if (!d) throw Error("unknown check id: " + id);
      if (std::find(selected.begin(), selected.end(), d) == selected.end())
        selected.push_back(d);
    }
    std::sort(selected.begin(), selected.end(), [](const CheckDef* a, const CheckDef* b) {
      return a < b;  // registry entries live in one vector, pointer order is registry order
    });
  }

  std::vector<const PreparedGroup*> groups;
  for (const PreparedGroup& pg : corpus)
    if (pg.table->order <= opts.max_order) groups.push_back(&pg);

  std::vector<std::vector<ReportRecord>> per(groups.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= groups.size()) break;
      per[i] = run_group(*groups[i], selected, opts.budget);
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || groups.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, int(groups.size()));
    pool.reserve(n);
    for (int k = 0; k < n; ++k) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  SuiteResult result;
  for (std::vector<ReportRecord>& rows : per)
    for (ReportRecord& r : rows) result.records.push_back(std::move(r));
  for (const ReportRecord& r : result.records)
    if (r.internal || (r.status == CheckStatus::Fails && !r.probe)) result.exit_code = 1;
  return result;
}

std::string emit_records(const std::vector<ReportRecord>& records) {
  std::ostringstream out;
  for (const ReportRecord& r : records) {
    out << "group=" << r.group << " order=" << r.order << " check_id=" << r.check_id
        << " status=" << to_string(r.status) << " witness=\"" << escape_witness(r.witness)
        << "\" phi=" << r.phi << " fit=" << r.fit << " fstar=" << r.fstar
        << " ftilde=" << r.ftilde << " ftilde_inf=" << r.ftilde_inf
        << " stab_index=" << r.stab_index << "\n";
  }
  return out.str();
}

std::string emit_table(const std::vector<ReportRecord>& records) {
  std::ostringstream out;

  std::vector<const ReportRecord*> rad_rows;
  std::vector<std::string> check_order;
  std::map<std::string, std::array<int, 4>> counts;
  std::vector<const ReportRecord*> failures;
  for (const ReportRecord& r : records) {
    if (r.check_id == "radicals") {
      rad_rows.push_back(&r);
    } else {
      if (!counts.count(r.check_id)) check_order.push_back(r.check_id);
      counts[r.check_id][size_t(r.status)]++;
    }
    if (r.status == CheckStatus::Fails) failures.push_back(&r);
  }

  size_t name_w = 5;
  for (const ReportRecord* r : rad_rows) name_w = std::max(name_w, r->group.size());
  auto pad = [&](const std::string& s, size_t w) {
    std::string t = s;
    t.resize(std::max(w, t.size()), ' ');
    return t;
  };
  out << pad("group", name_w) << "  order    phi    fit  fstar ftilde ft-inf   stab  "
      << "classes\n";
  for (const ReportRecord* r : rad_rows) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "  %5d  %5d  %5d  %5d  %5d  %5d  %5d  ", r->order, r->phi,
                  r->fit, r->fstar, r->ftilde, r->ftilde_inf, r->stab_index);
    std::string cls = r->witness;
    if (cls.rfind("classes: ", 0) == 0) cls = cls.substr(9);
    out << pad(r->group, name_w) << buf << cls << "\n";
  }

  if (!check_order.empty()) {
    size_t cw = 5;
    for (const std::string& id : check_order) cw = std::max(cw, id.size());
    out << "\n" << pad("check", cw) << "  holds  fails  vacuous  skipped\n";
    for (const std::string& id : check_order) {
      const auto& c = counts[id];
      char buf[64];
      std::snprintf(buf, sizeof buf, "  %5d  %5d  %7d  %7d", c[size_t(CheckStatus::Holds)],
                    c[size_t(CheckStatus::Fails)], c[size_t(CheckStatus::Vacuous)],
                    c[size_t(CheckStatus::Skipped)]);
      out << pad(id, cw) << buf << "\n";
    }
  }

  if (!failures.empty()) {
    out << "\nfailing rows:\n";
    for (const ReportRecord* r : failures)
      out << "  " << r->group << " " << r->check_id << ": " << r->witness << "\n";
  }
  return out.str();
}

}  // namespace grp
