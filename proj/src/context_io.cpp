#include "fcar/context_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace fcar {

namespace {

// Splits on '\n' and strips one trailing '\r' per line; a final newline does
// not produce an extra line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view raw, std::size_t line_no, const char* what) {
  const std::string_view s = trim(raw);
  if (s.empty()) throw ParseError(line_no, std::string("missing ") + what);
  std::size_t value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError(line_no, std::string("invalid ") + what + ": not a number");
    const std::size_t digit = static_cast<std::size_t>(c - '0');
    if (value > (SIZE_MAX - digit) / 10) throw ParseError(line_no, std::string("invalid ") + what + ": overflow");
    value = value * 10 + digit;
  }
  return value;
}

// Lines past `consumed` may only be empty.
void check_no_trailing(const std::vector<std::string_view>& lines, std::size_t consumed) {
  for (std::size_t i = consumed; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) throw ParseError(i + 1, "unexpected content after grid");
  }
}

void check_unique(std::unordered_set<std::string>& seen, const std::string& name,
                  std::size_t line_no, const char* universe) {
  if (!seen.insert(name).second)
    throw ParseError(line_no, std::string("duplicate ") + universe + " name: " + name);
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

}  // namespace

FormalContext parse_cxt(std::string_view text) {
  const auto lines = split_lines(text);
  auto line_at = [&](std::size_t idx) -> std::string_view {
    if (idx >= lines.size()) throw ParseError(lines.size() + 1, "unexpected end of file");
    return lines[idx];
  };

  if (trim(line_at(0)) != "B") throw ParseError(1, "expected header line 'B'");
  const std::string name(line_at(1));
  const std::size_t n_objects = parse_count(line_at(2), 3, "object count");
  const std::size_t n_attributes = parse_count(line_at(3), 4, "attribute count");

  std::size_t idx = 4;
  std::vector<std::string> objects;
  objects.reserve(n_objects);
  std::unordered_set<std::string> seen_objects;
  for (std::size_t g = 0; g < n_objects; ++g, ++idx) {
    std::string obj(line_at(idx));
    check_unique(seen_objects, obj, idx + 1, "object");
    objects.push_back(std::move(obj));
  }

  std::vector<std::string> attributes;
  attributes.reserve(n_attributes);
  std::unordered_set<std::string> seen_attributes;
  for (std::size_t m = 0; m < n_attributes; ++m, ++idx) {
    std::string attr(line_at(idx));
    check_unique(seen_attributes, attr, idx + 1, "attribute");
    attributes.push_back(std::move(attr));
  }

  std::vector<AttrSet> rows;
  rows.reserve(n_objects);
  for (std::size_t g = 0; g < n_objects; ++g, ++idx) {
    const std::string_view line = line_at(idx);
    if (line.size() != n_attributes)
      throw ParseError(idx + 1, "grid row has " + std::to_string(line.size()) + " cells, expected " +
                                    std::to_string(n_attributes));
    AttrSet row(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m) {
      const char c = line[m];
      if (c == 'X' || c == 'x')
        row.set(m);
      else if (c != '.')
        throw ParseError(idx + 1, std::string("unrecognized grid character '") + c + "'");
    }
    rows.push_back(std::move(row));
  }

  check_no_trailing(lines, idx);
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows), name);
}

FormalContext parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || trim(lines[0]).empty()) throw ParseError(1, "missing header row");

  const auto header = split_cells(lines[0]);
  std::vector<std::string> attributes;
  attributes.reserve(header.size() - 1);
  std::unordered_set<std::string> seen_attributes;
  for (std::size_t i = 1; i < header.size(); ++i) {
    std::string attr(header[i]);
    check_unique(seen_attributes, attr, 1, "attribute");
    attributes.push_back(std::move(attr));
  }
  const std::size_t n_attributes = attributes.size();

  std::vector<std::string> objects;
  std::vector<AttrSet> rows;
  std::unordered_set<std::string> seen_objects;
  std::size_t idx = 1;
  for (; idx < lines.size(); ++idx) {
    // Tolerate blank lines only at the end of the file.
    if (trim(lines[idx]).empty()) break;
    const auto cells = split_cells(lines[idx]);
    if (cells.size() != n_attributes + 1)
      throw ParseError(idx + 1, "row has " + std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(n_attributes + 1));
    std::string obj(cells[0]);
    check_unique(seen_objects, obj, idx + 1, "object");
    objects.push_back(std::move(obj));

    AttrSet row(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m) {
      const std::string_view cell = cells[m + 1];
      if (cell == "1" || cell == "X" || cell == "x")
        row.set(m);
      else if (!(cell.empty() || cell == "0" || cell == "."))
        throw ParseError(idx + 1, "unrecognized cell token '" + std::string(cell) + "'");
    }
    rows.push_back(std::move(row));
  }

  check_no_trailing(lines, idx);
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::string write_cxt(const FormalContext& ctx) {
  std::string out;
  out += "B\n";
  out += ctx.name();
  out += '\n';
  out += std::to_string(ctx.object_count());
  out += '\n';
  out += std::to_string(ctx.attribute_count());
  out += '\n';
  for (const auto& o : ctx.objects()) {
    out += o;
    out += '\n';
  }
  for (const auto& a : ctx.attributes()) {
    out += a;
    out += '\n';
  }
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
      out += ctx.incident(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

FormalContext load_context(const std::filesystem::path& path, std::optional<ContextFormat> format) {
  if (!format) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".cxt")
      format = ContextFormat::cxt;
    else if (ext == ".csv")
      format = ContextFormat::csv;
    else
      throw std::runtime_error("cannot infer context format from '" + path.string() +
                               "'; pass the format explicitly");
  }

  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  return *format == ContextFormat::cxt ? parse_cxt(text) : parse_csv(text);
}

void save_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace fcar
