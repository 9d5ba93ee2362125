#include "gcs/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gcs {

namespace {

using ordered_json = nlohmann::ordered_json;

int parse_csv_int(std::string_view token, std::size_t line, std::size_t field) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ", field " +
                     std::to_string(field) + ": '" + std::string(token) +
                     "' is not an integer");
  return value;
}

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string set_to_json(const GcsSet& set) {
  ordered_json j;
  j["p"] = set.params.p;
  j["q"] = set.params.q;
  j["L"] = set.params.L;
  j["m"] = set.params.m;
  j["k"] = set.params.k;
  j["digits"] = set.params.digits;
  j["pi"] = set.params.pi;
  j["c"] = set.params.c;
  j["c_prime"] = set.params.c_prime;
  j["g"] = print_anf(set.params.g);
  ordered_json members = ordered_json::array();
  for (const GcsSet::Member& mem : set.members) {
    ordered_json entry;
    entry["gamma"] = mem.gamma;
    entry["seq"] = mem.zq.values;
    members.push_back(std::move(entry));
  }
  j["members"] = std::move(members);
  return j.dump(2) + "\n";
}

LoadedSet load_set_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  try {
    LoadedSet out;
    out.q = j.at("q").get<int>();
    if (out.q < 2) throw ParseError("json: q must be >= 2");
    bool all_have_gamma = true;
    for (const auto& entry : j.at("members")) {
      out.rows.emplace_back(out.q, entry.at("seq").get<std::vector<int>>());
      if (entry.contains("gamma"))
        out.gammas.push_back(entry["gamma"].get<std::vector<int>>());
      else
        all_have_gamma = false;
    }
    if (!all_have_gamma) out.gammas.clear();
    if (out.rows.empty()) throw ParseError("json: members array is empty");
    for (const ZqSequence& row : out.rows)
      if (row.size() != out.rows.front().size())
        throw ParseError("json: member rows have different lengths");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

LoadedSet load_set_csv(const std::string& text, int q) {
  if (q < 2) throw ParseError("csv: alphabet size q must be >= 2");
  LoadedSet out;
  out.q = q;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<int> row;
    std::string_view rest = line;
    std::size_t field = 0;
    while (true) {
      ++field;
      const std::size_t comma = rest.find(',');
      const std::string_view tok =
          rest.substr(0, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma);
      const int v = parse_csv_int(tok, line_no, field);
      if (v < 0 || v >= q)
        throw ParseError("line " + std::to_string(line_no) + ", field " +
                         std::to_string(field) + ": entry " + std::to_string(v) +
                         " is outside [0, " + std::to_string(q) + ")");
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (width == 0) width = row.size();
    if (row.size() != width)
      throw ParseError("line " + std::to_string(line_no) + ": row has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(width));
    out.rows.emplace_back(q, std::move(row));
  }
  if (out.rows.empty()) throw ParseError("csv: no rows");
  return out;
}

std::string matrix_csv(const std::vector<ZqSequence>& rows) {
  std::string out;
  for (const ZqSequence& row : rows) {
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(row.values[i]);
    }
    out += '\n';
  }
  return out;
}

std::string pmepr_csv(const PmeprReport& report,
                      const std::vector<std::vector<int>>& gammas) {
  std::string out = "member_index,gamma,pmepr\n";
  for (std::size_t i = 0; i < report.values.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    if (i < gammas.size()) {
      for (std::size_t d = 0; d < gammas[i].size(); ++d) {
        if (d) out += ';';
        out += std::to_string(gammas[i][d]);
      }
    }
    out += ',';
    out += format_sig12(report.values[i]);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ParseError("error while reading '" + path + "'");
  return std::move(ss).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

}  // namespace gcs
