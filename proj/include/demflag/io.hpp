#pragma once

#include "demflag/crystal.hpp"
#include "demflag/flags.hpp"

#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <variant>

namespace demflag {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Wire schemas

/// {"h": [...]} for classical weights, {"h": [...], "d": n} for affine ones.
inline Json to_json(const Weight& w, bool with_grade) {
  Json j;
  j["h"] = w.h;
  if (with_grade) j["d"] = w.d;
  return j;
}

inline Weight weight_from_json(const Json& j) {
  Weight w(j.at("h").get<std::vector<std::int64_t>>(), 0);
  if (j.contains("d")) w.d = j.at("d").get<std::int64_t>();
  return w;
}

inline Json to_json(const WeylWord& w) { return Json(w.letters); }

/// Records sorted by (grade, h-values).
inline Json to_json(const GradedClassicalCharacter& g) {
  Json arr = Json::array();
  for (const auto& [key, c] : g)
    arr.push_back(Json{{"grade", key.grade}, {"weight", Json{{"h", key.h}}}, {"coeff", c}});
  return arr;
}

inline GradedClassicalCharacter graded_from_json(const std::string& datum, const Json& arr) {
  GradedClassicalCharacter g(datum);
  for (const auto& r : arr)
    g.add(weight_from_json(r.at("weight")), r.at("grade").get<std::int64_t>(), r.at("coeff").get<std::int64_t>());
  return g;
}

inline Json to_json(const FormalCharacter& f, bool with_grade) {
  Json arr = Json::array();
  for (const auto& [mu, c] : f) arr.push_back(Json{{"weight", to_json(mu, with_grade)}, {"coeff", c}});
  return arr;
}

inline FormalCharacter formal_from_json(const std::string& datum, const Json& arr) {
  FormalCharacter f(datum);
  for (const auto& r : arr) f.add(weight_from_json(r.at("weight")), r.at("coeff").get<std::int64_t>());
  return f;
}

inline Json to_json(const FlagDecomposition& fd) {
  Json pieces = Json::array();
  for (const auto& p : fd.pieces)
    pieces.push_back(Json{{"grade", p.grade}, {"lambda", to_json(p.lambda, false)}, {"mult", p.mult}});
  return Json{{"level", fd.level}, {"pieces", pieces}};
}

inline FlagDecomposition flag_from_json(const std::string& datum, const Json& j) {
  FlagDecomposition fd{datum, j.at("level").get<std::int64_t>(), {}};
  for (const auto& r : j.at("pieces"))
    fd.pieces.push_back(
        {weight_from_json(r.at("lambda")), r.at("grade").get<std::int64_t>(), r.at("mult").get<std::int64_t>()});
  return fd;
}

// ---------------------------------------------------------------------------
// Documents: an object whose leaves are scalars, arrays of scalars, or arrays
// of flat-ish records.  Rendered as JSON, CSV or an aligned text table; both
// text forms parse back to the same document.

enum class Format { Json, Csv, Table };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  return std::nullopt;
}

namespace detail {

inline bool is_record_array(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_object(); });
}

/// Column name -> cell, e.g. "weight.h[1]" -> 0.
inline void flatten_record(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string name = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten_record(*it, name, out);
    } else if (it->is_array()) {
      for (std::size_t k = 0; k < it->size(); ++k) out.emplace_back(name + "[" + std::to_string(k) + "]", (*it)[k]);
    } else {
      out.emplace_back(name, *it);
    }
  }
}

/// "weight.h[1]" -> "/weight/h/1"
inline Json::json_pointer column_pointer(const std::string& col) {
  std::string p = "/";
  for (char ch : col) {
    if (ch == '.' || ch == '[') p += '/';
    else if (ch != ']') p += ch;
  }
  return Json::json_pointer(p);
}

struct Section {
  std::string path;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Scalar {
  std::string path;
  std::string value;
};

using Item = std::variant<Scalar, Section>;

inline void collect(const Json& j, const std::string& prefix, std::vector<Item>& items) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      collect(*it, path, items);
    } else if (is_record_array(*it)) {
      Section s{path, {}, {}};
      for (const auto& rec : *it) {
        std::vector<std::pair<std::string, Json>> cells;
        flatten_record(rec, "", cells);
        if (s.columns.empty())
          for (const auto& c : cells) s.columns.push_back(c.first);
        std::vector<std::string> row;
        for (const auto& c : cells) row.push_back(c.second.dump());
        s.rows.push_back(std::move(row));
      }
      items.emplace_back(std::move(s));
    } else {
      items.emplace_back(Scalar{path, it->dump()});
    }
  }
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') quoted = !quoted;
    if (ch == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

inline void place_row(Json& doc, const std::string& path, const std::vector<std::string>& columns,
                      const std::vector<std::string>& cells) {
  if (cells.size() != columns.size()) throw std::runtime_error("row width does not match header in " + path);
  Json rec = Json::object();
  for (std::size_t k = 0; k < cells.size(); ++k) rec[column_pointer(columns[k])] = Json::parse(cells[k]);
  doc[column_pointer(path)].push_back(std::move(rec));
}

}  // namespace detail

inline std::string render(const Json& doc, Format fmt) {
  if (fmt == Format::Json) return doc.dump(2) + "\n";
  std::vector<detail::Item> items;
  detail::collect(doc, "", items);
  std::ostringstream os;
  for (const auto& item : items) {
    if (const auto* s = std::get_if<detail::Scalar>(&item)) {
      if (fmt == Format::Csv) os << "# " << s->path << "=" << s->value << "\n";
      else os << s->path << ": " << s->value << "\n";
      continue;
    }
    const auto& sec = std::get<detail::Section>(item);
    if (fmt == Format::Csv) {
      os << "## " << sec.path << "\n";
      for (std::size_t k = 0; k < sec.columns.size(); ++k) os << (k ? "," : "") << sec.columns[k];
      os << "\n";
      for (const auto& row : sec.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
        os << "\n";
      }
      os << "\n";
    } else {
      std::vector<std::size_t> width(sec.columns.size());
      for (std::size_t k = 0; k < width.size(); ++k) {
        width[k] = sec.columns[k].size();
        for (const auto& row : sec.rows) width[k] = std::max(width[k], row[k].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t k = 0; k < cells.size(); ++k) {
          std::ostringstream cell;
          cell << std::setw(static_cast<int>(width[k])) << cells[k];
          out += (k ? "  " : "") + cell.str();
        }
        os << out << "\n";
      };
      os << "[" << sec.path << "]\n";
      line(sec.columns);
      for (const auto& row : sec.rows) line(row);
      os << "\n";
    }
  }
  return os.str();
}

inline Json parse_document(const std::string& text, Format fmt) {
  if (fmt == Format::Json) return Json::parse(text);
  Json doc = Json::object();
  std::istringstream is(text);
  std::string line, section;
  std::vector<std::string> columns;
  bool want_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) {
      section.clear();
      continue;
    }
    const bool csv = fmt == Format::Csv;
    if (csv && line.rfind("## ", 0) == 0) {
      section = line.substr(3);
      want_header = true;
      continue;
    }
    if (!csv && line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      want_header = true;
      continue;
    }
    if (csv && line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      doc[detail::column_pointer(line.substr(2, eq - 2))] = Json::parse(line.substr(eq + 1));
      section.clear();
      continue;
    }
    if (!csv && section.empty()) {
      const auto colon = line.find(": ");
      doc[detail::column_pointer(line.substr(0, colon))] = Json::parse(line.substr(colon + 2));
      continue;
    }
    auto cells = csv ? detail::split_csv(line) : detail::split_ws(line);
    if (want_header) {
      columns = std::move(cells);
      want_header = false;
    } else {
      detail::place_row(doc, section, columns, cells);
    }
  }
  return doc;
}

}  // namespace demflag
