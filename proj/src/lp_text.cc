#include "mintplan/lp_text.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "mintplan/scenario_io.h"

namespace mintplan {
namespace {

std::string FormatNumber(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void AppendTerms(const std::vector<std::pair<std::string_view, double>>& terms,
                 std::string* out) {
  if (terms.empty()) {
    *out += " 0";
    return;
  }
  for (const auto& [name, coefficient] : terms) {
    *out += coefficient < 0 ? " - " : " + ";
    *out += FormatNumber(std::abs(coefficient));
    *out += ' ';
    *out += name;
  }
}

std::string_view RelationText(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

[[noreturn]] void Fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message, line, 1);
}

double ParseNumber(std::string_view token, int line) {
  if (token == "inf" || token == "+inf") return kInfinity;
  if (token == "-inf") return -kInfinity;
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    Fail(line, "expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

struct PendingExpr {
  int line = 0;
  std::vector<std::pair<std::string, double>> terms;
};

// Parses "+ c name - c name ..." or "0" from tokens[first, last).
PendingExpr ParseTerms(const std::vector<std::string_view>& tokens,
                       std::size_t first, std::size_t last, int line) {
  PendingExpr expr;
  expr.line = line;
  if (last - first == 1 && tokens[first] == "0") return expr;
  if ((last - first) % 3 != 0) Fail(line, "malformed linear expression");
  for (std::size_t i = first; i < last; i += 3) {
    double sign = 0;
    if (tokens[i] == "+") sign = 1;
    if (tokens[i] == "-") sign = -1;
    if (sign == 0) Fail(line, "expected '+' or '-'");
    const double magnitude = ParseNumber(tokens[i + 1], line);
    expr.terms.push_back({std::string(tokens[i + 2]), sign * magnitude});
  }
  return expr;
}

}  // namespace

std::string ExportLpText(const StandardFormProblem& problem) {
  std::string out(kLpTextHeader);
  out += "\nminimize\n obj:";
  std::vector<std::pair<std::string_view, double>> terms;
  for (int j = 0; j < problem.num_columns(); ++j) {
    if (problem.objective[j] != 0.0) {
      terms.push_back({problem.columns[j].name, problem.objective[j]});
    }
  }
  AppendTerms(terms, &out);
  out += "\nsubject to\n";
  for (const Row& row : problem.rows) {
    out += ' ';
    out += row.label;
    out += ':';
    terms.clear();
    for (const auto& [column, coefficient] : row.terms) {
      terms.push_back({problem.columns[column].name, coefficient});
    }
    AppendTerms(terms, &out);
    out += ' ';
    out += RelationText(row.relation);
    out += ' ';
    out += FormatNumber(row.rhs);
    out += '\n';
  }
  out += "bounds\n";
  for (const Column& column : problem.columns) {
    out += ' ' + FormatNumber(column.lower) + " <= " + column.name + " <= " +
           FormatNumber(column.upper) + '\n';
  }
  out += "binary\n";
  for (const Column& column : problem.columns) {
    if (column.binary) out += ' ' + column.name + '\n';
  }
  out += "end\n";
  return out;
}

StandardFormProblem ParseLpText(std::string_view text) {
  enum class Section { kHeader, kMinimize, kRows, kBounds, kBinary, kEnd };
  Section section = Section::kHeader;
  PendingExpr objective;
  bool have_objective = false;
  struct PendingRow {
    std::string label;
    PendingExpr expr;
    Relation relation;
    double rhs;
  };
  std::vector<PendingRow> rows;
  StandardFormProblem problem;
  std::unordered_map<std::string, int> index;

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_number = 0;
  while (std::getline(stream, raw)) {
    ++line_number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::vector<std::string_view> tokens = Tokens(raw);
    if (tokens.empty()) continue;
    if (section == Section::kHeader) {
      if (raw != kLpTextHeader) Fail(line_number, "missing header line");
      section = Section::kMinimize;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "minimize") continue;
    if (tokens.size() == 2 && tokens[0] == "subject" && tokens[1] == "to") {
      section = Section::kRows;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "bounds") {
      section = Section::kBounds;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "binary") {
      section = Section::kBinary;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "end") {
      section = Section::kEnd;
      continue;
    }
    switch (section) {
      case Section::kMinimize:
        if (tokens[0] != "obj:") Fail(line_number, "expected 'obj:'");
        objective = ParseTerms(tokens, 1, tokens.size(), line_number);
        have_objective = true;
        break;
      case Section::kRows: {
        if (tokens.size() < 4 || tokens[0].back() != ':') {
          Fail(line_number, "malformed row");
        }
        const std::string_view rel = tokens[tokens.size() - 2];
        Relation relation;
        if (rel == "<=") {
          relation = Relation::kLessEqual;
        } else if (rel == "=") {
          relation = Relation::kEqual;
        } else if (rel == ">=") {
          relation = Relation::kGreaterEqual;
        } else {
          Fail(line_number, "unknown relation '" + std::string(rel) + "'");
        }
        rows.push_back(
            {std::string(tokens[0].substr(0, tokens[0].size() - 1)),
             ParseTerms(tokens, 1, tokens.size() - 2, line_number), relation,
             ParseNumber(tokens.back(), line_number)});
        break;
      }
      case Section::kBounds: {
        if (tokens.size() != 5 || tokens[1] != "<=" || tokens[3] != "<=") {
          Fail(line_number, "malformed bound");
        }
        const std::string name(tokens[2]);
        if (index.contains(name)) Fail(line_number, "duplicate column " + name);
        index[name] = problem.num_columns();
        problem.AddColumn({name, ParseNumber(tokens[0], line_number),
                           ParseNumber(tokens[4], line_number), false});
        break;
      }
      case Section::kBinary: {
        for (std::string_view token : tokens) {
          auto it = index.find(std::string(token));
          if (it == index.end()) {
            Fail(line_number, "unknown column " + std::string(token));
          }
          problem.columns[it->second].binary = true;
        }
        break;
      }
      case Section::kEnd:
        Fail(line_number, "content after 'end'");
      case Section::kHeader:
        break;
    }
  }
  if (section != Section::kEnd) Fail(line_number, "missing 'end'");
  if (!have_objective) Fail(line_number, "missing objective");

  auto resolve = [&](const PendingExpr& expr) {
    std::vector<std::pair<int, double>> out;
    for (const auto& [name, coefficient] : expr.terms) {
      auto it = index.find(name);
      if (it == index.end()) Fail(expr.line, "unknown column " + name);
      out.push_back({it->second, coefficient});
    }
    return out;
  };
  for (const auto& [column, coefficient] : resolve(objective)) {
    problem.objective[column] = coefficient;
  }
  for (PendingRow& row : rows) {
    Row parsed{std::move(row.label), resolve(row.expr), row.relation, row.rhs};
    problem.rows.push_back(std::move(parsed));
  }
  return problem;
}

}  // namespace mintplan
