#include "cartier/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace cartier {

using ordered_json = nlohmann::ordered_json;

ReportDocument make_report(const InvariantReport& inv, const PhaseTimings& t) {
  ReportDocument doc;
  doc.family = family_name(inv.family);
  doc.p = inv.p;
  doc.n = inv.n;
  doc.degree = inv.degree;
  doc.genus = inv.genus;
  doc.cartier_rank = inv.cartier_rank;
  doc.a_number = inv.a_number;
  doc.p_rank = inv.p_rank;
  doc.nilpotency_index = inv.nilpotency_index;
  doc.superspecial = inv.superspecial;
  doc.ordinary = inv.ordinary;
  doc.methods = inv.methods;
  doc.timings = {{"build_us", t.build_us}, {"rank_us", t.rank_us}, {"powers_us", t.powers_us}};
  return doc;
}

std::string report_to_json(const ReportDocument& doc) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["family"] = doc.family;
  j["p"] = doc.p;
  if (doc.n) {
    j["n"] = *doc.n;
  } else {
    j["n"] = nullptr;
  }
  j["degree"] = doc.degree;
  j["genus"] = doc.genus;
  j["cartier_rank"] = doc.cartier_rank;
  j["a_number"] = doc.a_number;
  j["p_rank"] = doc.p_rank;
  j["nilpotency_index"] = doc.nilpotency_index;
  j["superspecial"] = doc.superspecial;
  j["ordinary"] = doc.ordinary;
  ordered_json methods;
  for (const auto& [k, v] : doc.methods) methods[k] = v;
  j["methods"] = methods;
  ordered_json timings;
  for (const auto& [k, v] : doc.timings) timings[k] = v;
  j["timings"] = timings;
  return j.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  doc.family = j.at("family").get<std::string>();
  doc.p = j.at("p").get<std::uint64_t>();
  if (!j.at("n").is_null()) doc.n = j.at("n").get<std::int64_t>();
  doc.degree = j.at("degree").get<std::int64_t>();
  doc.genus = j.at("genus").get<std::int64_t>();
  doc.cartier_rank = j.at("cartier_rank").get<std::int64_t>();
  doc.a_number = j.at("a_number").get<std::int64_t>();
  doc.p_rank = j.at("p_rank").get<std::int64_t>();
  doc.nilpotency_index = j.at("nilpotency_index").get<std::int64_t>();
  doc.superspecial = j.at("superspecial").get<bool>();
  doc.ordinary = j.at("ordinary").get<bool>();
  for (const auto& [k, v] : j.at("methods").items()) {
    doc.methods.emplace_back(k, v.get<std::string>());
  }
  for (const auto& [k, v] : j.at("timings").items()) {
    doc.timings.emplace_back(k, v.get<std::int64_t>());
  }
  return doc;
}

namespace {

std::string opt_str(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string report_to_table(const ReportDocument& doc) {
  std::ostringstream os;
  auto line = [&os](const std::string& key, const std::string& val) {
    os << std::left << std::setw(18) << key << val << "\n";
  };
  line("family", doc.family);
  line("p", std::to_string(doc.p));
  line("n", doc.n ? std::to_string(*doc.n) : "-");
  line("degree", std::to_string(doc.degree));
  line("genus", std::to_string(doc.genus));
  line("cartier_rank", std::to_string(doc.cartier_rank));
  line("a_number", std::to_string(doc.a_number));
  line("p_rank", std::to_string(doc.p_rank));
  line("nilpotency_index", std::to_string(doc.nilpotency_index));
  line("superspecial", bool_str(doc.superspecial));
  line("ordinary", bool_str(doc.ordinary));
  std::ostringstream ms;
  for (std::size_t t = 0; t < doc.methods.size(); ++t) {
    if (t > 0) ms << " ";
    ms << doc.methods[t].first << "=" << doc.methods[t].second;
  }
  line("methods", ms.str());
  std::ostringstream ts;
  for (std::size_t t = 0; t < doc.timings.size(); ++t) {
    if (t > 0) ts << " ";
    ts << doc.timings[t].first << "=" << doc.timings[t].second;
  }
  line("timings", ts.str());
  return os.str();
}

void SweepRow::judge_agreement() {
  agree = true;
  std::optional<std::int64_t> ref;
  for (const auto& r : {rank_matrix, rank_counting, rank_closed}) {
    if (!r) continue;
    if (!ref) {
      ref = r;
    } else if (*ref != *r) {
      agree = false;
    }
  }
}

std::string csv_header() {
  return "family,p,n,degree,genus,rank_matrix,rank_counting,rank_closed,a_number,p_rank,agree";
}

std::string to_csv(const SweepRow& row) {
  std::ostringstream os;
  os << row.family << "," << row.p << "," << row.n << "," << row.degree << "," << row.genus
     << "," << opt_str(row.rank_matrix) << "," << opt_str(row.rank_counting) << ","
     << opt_str(row.rank_closed) << "," << row.a_number << "," << opt_str(row.p_rank) << ","
     << bool_str(row.agree);
  return os.str();
}

SweepRow report_to_sweep_row(const ReportDocument& doc) {
  SweepRow row;
  row.family = doc.family;
  row.p = doc.p;
  row.n = doc.n.value_or(0);
  row.degree = doc.degree;
  row.genus = doc.genus;
  row.rank_matrix = doc.cartier_rank;
  row.a_number = doc.a_number;
  row.p_rank = doc.p_rank;
  row.judge_agreement();
  return row;
}

std::string sweep_row_to_json(const SweepRow& row) {
  ordered_json j;
  j["family"] = row.family;
  j["p"] = row.p;
  if (row.s) {
    j["s"] = *row.s;
  } else {
    j["s"] = nullptr;
  }
  j["n"] = row.n;
  j["degree"] = row.degree;
  j["genus"] = row.genus;
  auto put = [&j](const char* key, const std::optional<std::int64_t>& v) {
    if (v) {
      j[key] = *v;
    } else {
      j[key] = nullptr;
    }
  };
  put("rank_matrix", row.rank_matrix);
  put("rank_counting", row.rank_counting);
  put("rank_closed", row.rank_closed);
  j["a_number"] = row.a_number;
  put("p_rank", row.p_rank);
  j["agree"] = row.agree;
  return j.dump();
}

std::string sweep_table_header() {
  std::ostringstream os;
  os << std::left << std::setw(9) << "family" << std::right << std::setw(4) << "p" << std::setw(5)
     << "n" << std::setw(7) << "deg" << std::setw(7) << "genus" << std::setw(9) << "rk_mat"
     << std::setw(9) << "rk_cnt" << std::setw(9) << "rk_cf" << std::setw(9) << "a_num"
     << std::setw(8) << "p_rank" << std::setw(7) << "agree";
  return os.str();
}

std::string to_table_row(const SweepRow& row) {
  auto cell = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; };
  std::ostringstream os;
  os << std::left << std::setw(9) << row.family << std::right << std::setw(4) << row.p
     << std::setw(5) << row.n << std::setw(7) << row.degree << std::setw(7) << row.genus
     << std::setw(9) << cell(row.rank_matrix) << std::setw(9) << cell(row.rank_counting)
     << std::setw(9) << cell(row.rank_closed) << std::setw(9) << row.a_number << std::setw(8)
     << cell(row.p_rank) << std::setw(7) << bool_str(row.agree);
  return os.str();
}

}  // namespace cartier
