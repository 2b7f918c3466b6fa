#include "qdiscord/record_io.hpp"

#include <fmt/format.h>

#include "json.hpp"

namespace qd {

namespace {

using nlohmann::json;

// shortest round-trip representation
std::string num(double v) { return fmt::format("{}", v); }

template <class T>
std::string opt(const std::optional<T>& v) {
  return v ? fmt::format("{}", *v) : std::string();
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> record_cells(const OutputRecord& r) {
  std::optional<double> kx, ky, kz;
  if (r.direction) {
    kx = (*r.direction)(0);
    ky = (*r.direction)(1);
    kz = (*r.direction)(2);
  }
  return {r.model,      r.model == "aligned" ? std::string() : std::to_string(r.n),
          r.model == "aligned" ? std::string() : num(r.chi),
          num(r.x),     opt(r.separation), opt(r.parity), opt(r.e_minus), opt(r.e_plus), opt(r.d), opt(r.i1), opt(r.i2),
          opt(r.i3),    opt(r.iq),         opt(r.c),      opt(kx),        opt(ky),       opt(kz),  opt(r.d_ref),
          opt(r.i2_ref), opt(r.i3_ref),    opt(r.closed_diff), join(r.flags, ";")};
}

}  // namespace

const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> cols{"model", "n",     "chi",    "B_or_theta", "L",      "parity",
                                             "E_minus", "E_plus", "D",   "I1",         "I2",     "I3",
                                             "Iq",    "C",     "kx",     "ky",         "kz",     "D_ref",
                                             "I2_ref", "I3_ref", "closed_diff", "flags"};
  return cols;
}

void write_records_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  out << "# schema=" << kSchemaVersion << "\n" << join(record_columns(), ",") << "\n";
  for (const OutputRecord& r : records) out << join(record_cells(r), ",") << "\n";
}

void write_records_json(std::ostream& out, const std::vector<OutputRecord>& records) {
  json arr = json::array();
  for (const OutputRecord& r : records) {
    json o;
    o["model"] = r.model;
    o["n"] = r.model == "aligned" ? json(nullptr) : json(r.n);
    o["chi"] = r.model == "aligned" ? json(nullptr) : json(r.chi);
    o["B_or_theta"] = r.x;
    o["L"] = opt_json(r.separation);
    o["parity"] = opt_json(r.parity);
    o["E_minus"] = opt_json(r.e_minus);
    o["E_plus"] = opt_json(r.e_plus);
    o["D"] = opt_json(r.d);
    o["I1"] = opt_json(r.i1);
    o["I2"] = opt_json(r.i2);
    o["I3"] = opt_json(r.i3);
    o["Iq"] = opt_json(r.iq);
    o["C"] = opt_json(r.c);
    o["kx"] = r.direction ? json((*r.direction)(0)) : json(nullptr);
    o["ky"] = r.direction ? json((*r.direction)(1)) : json(nullptr);
    o["kz"] = r.direction ? json((*r.direction)(2)) : json(nullptr);
    o["D_ref"] = opt_json(r.d_ref);
    o["I2_ref"] = opt_json(r.i2_ref);
    o["I3_ref"] = opt_json(r.i3_ref);
    o["closed_diff"] = opt_json(r.closed_diff);
    o["flags"] = r.flags;
    arr.push_back(std::move(o));
  }
  out << arr.dump(1) << "\n";
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format) {
  if (format == OutputFormat::Json) {
    write_records_json(out, records);
  } else {
    write_records_csv(out, records);
  }
}

const std::vector<std::string>& factorize_columns() {
  static const std::vector<std::string> cols{"geometry", "n",     "s",     "chi",           "axes_swapped",
                                             "theta",    "B_s",   "site",  "field",         "site_residual",
                                             "max_pair_residual", "eigen_residual"};
  return cols;
}

void write_factorize(std::ostream& out, const FactorizeReport& rep, OutputFormat format) {
  const FactorizeConfig& c = rep.config;
  if (format == OutputFormat::Json) {
    json doc{{"schema", kSchemaVersion},
             {"geometry", to_string(c.geometry)},
             {"n", c.n},
             {"s", c.s},
             {"chi", rep.chi},
             {"axes_swapped", rep.axes_swapped},
             {"theta", rep.theta},
             {"B_s", rep.b_s},
             {"fields", std::vector<double>(rep.fields.data(), rep.fields.data() + rep.fields.size())},
             {"site_residuals",
              std::vector<double>(rep.site_residuals.data(), rep.site_residuals.data() + rep.site_residuals.size())},
             {"max_pair_residual", rep.max_pair_residual},
             {"max_site_residual", rep.max_site_residual},
             {"eigen_residual", opt_json(rep.eigen_residual)}};
    out << doc.dump(1) << "\n";
    return;
  }
  out << "# schema=" << kSchemaVersion << "\n" << join(factorize_columns(), ",") << "\n";
  for (int i = 0; i < c.n; ++i) {
    out << join({to_string(c.geometry), std::to_string(c.n), num(c.s), num(rep.chi), rep.axes_swapped ? "1" : "0",
                 num(rep.theta), num(rep.b_s), std::to_string(i), num(rep.fields(i)), num(rep.site_residuals(i)),
                 num(rep.max_pair_residual), opt(rep.eigen_residual)},
                ",")
        << "\n";
  }
}

}  // namespace qd
