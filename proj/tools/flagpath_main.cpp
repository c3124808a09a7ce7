// flagpath: distance vectors of full flag codes as Motzkin paths.
//
// Verbs: count, table, convert, path, enum, realize, analyze.
// Exit codes: 0 success, 1 usage error, 2 validation error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flagpath/bijection.hpp"
#include "flagpath/code.hpp"
#include "flagpath/construct.hpp"
#include "flagpath/document.hpp"
#include "flagpath/motzkin.hpp"

namespace {

using namespace flagpath;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct ValidationExit {
  std::string message;
};

[[noreturn]] void fail(const std::string& message) {
  throw ValidationExit{message};
}

PathClass parse_class(const std::string& name) {
  if (name == "all") return PathClass::All;
  if (name == "elevated") return PathClass::Elevated;
  return PathClass::Riordan;
}

std::string trim_right(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// ---- count ----

int run_count(const std::string& kind, int n, std::optional<std::int64_t> d) {
  BigInt value;
  if (kind == "motzkin") {
    value = motzkin_number(n);
  } else if (kind == "catalan") {
    value = catalan_number(n);
  } else if (kind == "elevated") {
    value = elevated_number(n);
  } else if (kind == "riordan") {
    value = riordan_number(n);
  } else if (kind == "area") {
    if (!d) fail("count area needs --d");
    value = area_count(n, *d);
  } else {  // disjoint
    if (!d) fail("count disjoint needs --d");
    value = disjoint_vector_count(n, *d);
  }
  std::cout << value.get_str() << "\n";
  return 0;
}

// ---- table ----

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) line += "  ";
      std::string cell = c < cells.size() ? cells[c] : "";
      line += std::string(widths[c] - cell.size(), ' ') + cell;
    }
    std::cout << trim_right(line) << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

int run_table(const std::string& kind, int max_n) {
  if (kind == "area") {
    const std::int64_t kmax = std::int64_t(max_n) * max_n / 4;
    std::vector<std::string> header{"n\\k"};
    for (std::int64_t k = 0; k <= kmax; ++k) header.push_back(std::to_string(k));
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= max_n; ++n) {
      std::vector<std::string> row{std::to_string(n)};
      const std::int64_t row_max = std::int64_t(n) * n / 4;
      for (std::int64_t k = 0; k <= kmax; ++k) {
        row.push_back(k <= row_max ? area_count(n, k).get_str() : "");
      }
      rows.push_back(std::move(row));
    }
    print_table(header, rows);
  } else {  // disjoint
    const std::int64_t dmax =
        max_n >= 2 ? (max_n - 1) + std::int64_t(max_n - 2) * (max_n - 2) / 4 : 0;
    std::vector<std::string> header{"n\\d"};
    for (std::int64_t d = 0; d <= dmax; ++d) header.push_back(std::to_string(d));
    std::vector<std::vector<std::string>> rows;
    for (int n = 2; n <= max_n; ++n) {
      std::vector<std::string> row{std::to_string(n)};
      const std::int64_t row_max = (n - 1) + std::int64_t(n - 2) * (n - 2) / 4;
      for (std::int64_t d = 0; d <= dmax; ++d) {
        if (d < n - 1) {
          row.push_back("-");
        } else if (d <= row_max) {
          row.push_back(disjoint_vector_count(n, d).get_str());
        } else {
          row.push_back("");
        }
      }
      rows.push_back(std::move(row));
    }
    print_table(header, rows);
  }
  return 0;
}

// ---- convert ----

int run_convert(const std::string& direction, const std::string& payload) {
  if (direction == "to-path") {
    std::vector<int> comps = parse_components(payload);
    DistanceVector v = validate_distance_vector(comps, int(comps.size()) + 1);
    std::cout << psi(v).str() << "\n";
  } else {
    MotzkinWord w(payload);
    std::cout << to_string(phi(w)) << "\n";
  }
  return 0;
}

// ---- path ----

std::string draw_path(const MotzkinWord& w) {
  if (w.size() == 0) return "";
  std::vector<int> h = heights(w);
  int max_band = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int band = (w[i] == 'U')   ? h[i]
               : (w[i] == 'D') ? h[i + 1]
                               : h[i];
    max_band = std::max(max_band, band);
  }
  std::vector<std::string> rows(std::size_t(max_band) + 1,
                                std::string(w.size(), ' '));
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'U') {
      rows[std::size_t(h[i])][i] = '/';
    } else if (w[i] == 'D') {
      rows[std::size_t(h[i + 1])][i] = '\\';
    } else {
      rows[std::size_t(h[i])][i] = '_';
    }
  }
  std::string out;
  for (std::size_t b = rows.size(); b-- > 0;) {
    out += trim_right(rows[b]) + "\n";
  }
  return out;
}

int run_path(const std::string& sub, const std::string& word) {
  MotzkinWord w(word);
  if (sub == "area") {
    std::cout << area(w) << "\n";
  } else if (sub == "strips") {
    StripDecomposition sd = strip_decomposition(w);
    std::string line;
    for (const Strip& s : sd.strips) {
      if (!line.empty()) line += " ";
      line += "(" + std::to_string(s.open) + "," + std::to_string(s.close) +
              "):" + std::to_string(s.area());
    }
    std::cout << line << "\n";
  } else if (sub == "decompose") {
    std::int64_t total = 0;
    std::string line;
    for (const MotzkinWord& factor : elevated_factorization(w)) {
      std::int64_t a = area(factor);
      total += a;
      line += factor.str() + ":" + std::to_string(a) + " ";
    }
    std::cout << line << "total:" << total << "\n";
  } else {  // draw
    std::cout << draw_path(w);
  }
  return 0;
}

// ---- enum ----

int run_enum(int n, const std::string& cls, std::optional<std::int64_t> area_filter,
             std::optional<std::int64_t> limit) {
  if (n > 18 && !limit) {
    throw CLI::ValidationError("--n above 18 requires --limit");
  }
  std::int64_t emitted = 0;
  for_each_path(n, parse_class(cls), area_filter, [&](const MotzkinWord& w) {
    std::cout << w.str() << "\n";
    ++emitted;
    return !limit || emitted < *limit;
  });
  return 0;
}

// ---- realize ----

int run_realize(int n, std::uint32_t q, const std::string& vector_text) {
  std::vector<int> comps = parse_components(vector_text);
  DistanceVector v = validate_distance_vector(comps, n);
  std::cout << realize_document(v, q);
  return 0;
}

// ---- analyze ----

int run_analyze(const std::string& file, bool all_pairs) {
  std::ifstream in(file);
  if (!in) fail("cannot open '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  FlagCode code = parse_flag_code_document(buf.str());
  std::cout << analyze_report(code, all_pairs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance vectors of full flag codes as Motzkin paths"};
  app.require_subcommand(1);

  // count
  std::string count_kind;
  int count_n = 0;
  std::optional<std::int64_t> count_d;
  auto* count = app.add_subcommand("count", "Print an exact count");
  count->add_option("kind", count_kind, "What to count")
      ->required()
      ->check(CLI::IsMember({"motzkin", "catalan", "elevated", "riordan", "area",
                             "disjoint"}));
  count->add_option("--n", count_n, "Path length / ambient dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count->add_option("--d", count_d, "Area / flag distance value");

  // table
  std::string table_kind;
  int table_max_n = 8;
  auto* table = app.add_subcommand("table", "Print a count table");
  table->add_option("kind", table_kind, "Which table")
      ->required()
      ->check(CLI::IsMember({"area", "disjoint"}));
  table->add_option("--max-n", table_max_n, "Largest row (at most 20)")
      ->required()
      ->check(CLI::Range(0, 20));

  // convert
  std::string convert_dir, convert_payload;
  auto* convert = app.add_subcommand("convert", "Convert between distance vectors and Motzkin words");
  convert->add_option("direction", convert_dir, "to-path or to-vector")
      ->required()
      ->check(CLI::IsMember({"to-path", "to-vector"}));
  convert->add_option("payload", convert_payload,
                      "Comma-separated vector or UHD word")
      ->required();

  // path
  std::string path_sub, path_word;
  auto* path = app.add_subcommand("path", "Inspect a Motzkin word");
  path->add_option("sub", path_sub, "area, strips, decompose or draw")
      ->required()
      ->check(CLI::IsMember({"area", "strips", "decompose", "draw"}));
  path->add_option("word", path_word, "Motzkin word over U, H, D")->required();

  // enum
  int enum_n = 0;
  std::string enum_class = "all";
  std::optional<std::int64_t> enum_area, enum_limit;
  auto* enumerate = app.add_subcommand("enum", "List Motzkin words, one per line");
  enumerate->add_option("--n", enum_n, "Path length")->required()->check(CLI::Range(0, 1000));
  enumerate->add_option("--class", enum_class, "all, elevated or riordan")
      ->check(CLI::IsMember({"all", "elevated", "riordan"}));
  enumerate->add_option("--area", enum_area, "Only words with this exact area");
  enumerate->add_option("--limit", enum_limit, "Stop after this many words")
      ->check(CLI::PositiveNumber);

  // realize
  int realize_n = 0;
  std::uint32_t realize_q = 2;
  std::string realize_vector;
  auto* realize_cmd = app.add_subcommand(
      "realize", "Build a pair of full flags with a given distance vector");
  realize_cmd->add_option("--n", realize_n, "Ambient dimension")->required();
  realize_cmd->add_option("--q", realize_q, "Prime field size")->required();
  realize_cmd->add_option("--vector", realize_vector, "Comma-separated distance vector")
      ->required();

  // analyze
  std::string analyze_file;
  bool analyze_all_pairs = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a flag-code document");
  analyze->add_option("file", analyze_file, "Path to a JSON flag-code document")
      ->required();
  analyze->add_flag("--all-pairs", analyze_all_pairs,
                    "Also report the distance vectors of every pair");

  try {
    app.parse(argc, argv);

    if (*count) return run_count(count_kind, count_n, count_d);
    if (*table) return run_table(table_kind, table_max_n);
    if (*convert) return run_convert(convert_dir, convert_payload);
    if (*path) return run_path(path_sub, path_word);
    if (*enumerate) return run_enum(enum_n, enum_class, enum_area, enum_limit);
    if (*realize_cmd) return run_realize(realize_n, realize_q, realize_vector);
    if (*analyze) return run_analyze(analyze_file, analyze_all_pairs);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const ValidationExit& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
