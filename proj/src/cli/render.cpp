#include <algorithm>
#include <sstream>

#include "efgc/cli/commands.hpp"
#include "efgc/error.hpp"

namespace efgc {
namespace {

using ojson = nlohmann::ordered_json;

bool is_table(const ojson& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const ojson& r) { return r.is_object(); });
}

std::string cell(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + cell(v[i]);
    return out;
  }
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> columns(const ojson& table) {
  std::vector<std::string> cols;
  for (const auto& row : table)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  return cols;
}

void collect(const ojson& v, const std::string& path, std::vector<std::pair<std::string, const ojson*>>& tables,
             std::vector<std::pair<std::string, std::string>>& scalars) {
  if (is_table(v)) {
    tables.emplace_back(path, &v);
  } else if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) collect(it.value(), path.empty() ? it.key() : path + "." + it.key(), tables, scalars);
  } else if (v.is_array() && !v.empty() && v[0].is_array()) {
    for (size_t i = 0; i < v.size(); ++i) scalars.emplace_back(path + "[" + std::to_string(i) + "]", cell(v[i]));
  } else {
    scalars.emplace_back(path, cell(v));
  }
}

std::string render_csv(const ojson& doc) {
  std::vector<std::pair<std::string, const ojson*>> tables;
  std::vector<std::pair<std::string, std::string>> scalars;
  collect(doc.at("results"), "", tables, scalars);
  std::ostringstream os;
  if (tables.empty()) {
    os << "key,value\n";
    for (const auto& [k, v] : scalars) os << csv_field(k) << "," << csv_field(v) << "\n";
    return os.str();
  }
  bool first = true;
  for (const auto& [name, t] : tables) {
    if (tables.size() > 1) os << (first ? "" : "\n") << "# " << name << "\n";
    first = false;
    auto cols = columns(*t);
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
    os << "\n";
    for (const auto& row : *t) {
      for (size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ",";
        if (row.contains(cols[i])) os << csv_field(cell(row.at(cols[i])));
      }
      os << "\n";
    }
  }
  return os.str();
}

void pretty_table(std::ostringstream& os, const std::string& name, const ojson& t) {
  auto cols = columns(t);
  std::vector<size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t) {
    std::vector<std::string> line;
    for (size_t i = 0; i < cols.size(); ++i) {
      line.push_back(row.contains(cols[i]) ? cell(row.at(cols[i])) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(line);
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << "  ";
    for (size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << "\n";
  };
  os << name << ":\n";
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void pretty(std::ostringstream& os, const ojson& v, const std::string& path) {
  if (is_table(v)) {
    pretty_table(os, path, v);
  } else if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) pretty(os, it.value(), path.empty() ? it.key() : path + "." + it.key());
  } else if (v.is_array() && !v.empty() && v[0].is_array()) {
    os << path << ":\n";
    for (const auto& row : v) {
      os << " ";
      for (const auto& c : row) os << " " << cell(c);
      os << "\n";
    }
  } else if (v.is_array()) {
    os << path << ": [";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << cell(v[i]);
    os << "]\n";
  } else {
    os << path << ": " << cell(v) << "\n";
  }
}

std::string render_pretty(const ojson& doc) {
  std::ostringstream os;
  os << "efgc " << doc.at("command").get<std::string>() << "\n";
  const ojson& in = doc.at("inputs");
  for (auto it = in.begin(); it != in.end(); ++it) os << "  " << it.key() << " = " << cell(it.value()) << "\n";
  pretty(os, doc.at("results"), "");
  return os.str();
}

}  // namespace

std::string render(const ojson& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "csv") return render_csv(doc);
  if (format == "pretty") return render_pretty(doc);
  throw Error(ErrorKind::kParseError, "unknown output format '" + format + "'");
}

}  // namespace efgc
