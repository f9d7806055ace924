// Copyright 2026 The DocEdit Tools Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "docedit/report.h"

#include <cstdio>

#include "docedit/error.h"
#include "docedit/strings.h"
#include "json.hpp"

namespace docedit {
namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kCommandHeaders[] = {"EM (%)", "Word Overlap F1", "ROUGE-L",
                                           "Action (%)", "Component (%)", "n"};
constexpr const char* kBboxHeaders[] = {"Top-1 Acc (%)", "Mean IoU", "n"};
constexpr const char* kStructuralHeaders[] = {"ROUGE-L", "Word Overlap F1", "Tree Edit Distance",
                                              "CSS IoU", "n"};
constexpr const char* kHumanHeaders[] = {"SR (%)", "EC (%)", "CC (%)", "Total Score (%)", "n"};
constexpr const char* kAgreementHeaders[] = {"SR kappa", "EC kappa", "CC kappa", "rater pairs"};

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Pct(double v) { return Fixed(v, 2); }
std::string Frac(double v) { return Fixed(v, 4); }
std::string Count(std::size_t n) { return std::to_string(n); }
std::string MaybeFrac(const std::optional<double>& v) { return v ? Frac(*v) : "n/a"; }

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::vector<Table> BuildTables(const Report& r) {
  std::vector<Table> tables;
  if (const auto& c = r.command_metrics) {
    tables.push_back({"Command generation",
                      {std::begin(kCommandHeaders), std::end(kCommandHeaders)},
                      {{Pct(c->exact_match_pct), Frac(c->word_overlap_f1), Frac(c->rouge_l),
                        Pct(c->action_pct), Pct(c->component_pct), Count(c->n)}}});
  }
  if (const auto& b = r.bbox) {
    tables.push_back({"Grounding",
                      {std::begin(kBboxHeaders), std::end(kBboxHeaders)},
                      {{Pct(b->top1_pct), Frac(b->mean_iou), Count(b->n)}}});
  }
  if (const auto& s = r.structural) {
    tables.push_back({"Document editing",
                      {std::begin(kStructuralHeaders), std::end(kStructuralHeaders)},
                      {{Frac(s->rouge_l), Frac(s->word_f1), Fixed(s->tree_edit_distance_mean, 2),
                        Frac(s->css_iou_mean), Count(s->n)}}});
  }
  if (const auto& h = r.human) {
    tables.push_back({"Human evaluation",
                      {std::begin(kHumanHeaders), std::end(kHumanHeaders)},
                      {{Pct(h->sr_pct), Pct(h->ec_pct), Pct(h->cc_pct), Pct(h->total_pct),
                        Count(h->n)}}});
  }
  if (const auto& a = r.agreement) {
    tables.push_back({"Inter-rater agreement",
                      {std::begin(kAgreementHeaders), std::end(kAgreementHeaders)},
                      {{MaybeFrac(a->sr), MaybeFrac(a->ec), MaybeFrac(a->cc), Count(a->pairs)}}});
  }
  if (const auto& m = r.correlations) {
    Table t{"Pearson correlation", {""}, {}};
    for (const std::string& c : m->cols) t.headers.push_back(c);
    for (std::size_t i = 0; i < m->rows.size(); ++i) {
      std::vector<std::string> row{m->rows[i]};
      for (const auto& v : m->values[i]) row.push_back(MaybeFrac(v));
      t.rows.push_back(std::move(row));
    }
    std::vector<std::string> n_row{"n"};
    for (std::size_t n : m->col_n) n_row.push_back(Count(n));
    t.rows.push_back(std::move(n_row));
    tables.push_back(std::move(t));
  }
  if (!r.failures.empty()) {
    Table t{"Failures", {"id", "stage", "message"}, {}};
    for (const RecordFailure& f : r.failures) t.rows.push_back({f.id, f.stage, f.message});
    tables.push_back(std::move(t));
  }
  return tables;
}

std::string MarkdownCell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string EmitMarkdown(const Report& r) {
  std::string out;
  for (const Table& t : BuildTables(r)) {
    if (!out.empty()) out += "\n";
    out += "### " + t.title + "\n\n|";
    for (const std::string& h : t.headers) out += " " + MarkdownCell(h) + " |";
    out += "\n|";
    for (std::size_t i = 0; i < t.headers.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& row : t.rows) {
      out += "|";
      for (const std::string& cell : row) out += " " + MarkdownCell(cell) + " |";
      out += "\n";
    }
  }
  return out;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Long format, one metric per line, in table then column order.
std::string EmitCsv(const Report& r) {
  std::string out = "table,row,column,value\n";
  for (const Table& t : BuildTables(r)) {
    const bool labelled = t.headers.front().empty();
    for (std::size_t ri = 0; ri < t.rows.size(); ++ri) {
      const auto& row = t.rows[ri];
      const std::string row_label = labelled ? row.front() : std::to_string(ri + 1);
      for (std::size_t c = labelled ? 1 : 0; c < row.size(); ++c) {
        out += CsvField(t.title) + "," + CsvField(row_label) + "," + CsvField(t.headers[c]) + "," +
               CsvField(row[c]) + "\n";
      }
    }
  }
  return out;
}

ojson OptionalNumber(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::optional<double> ReadOptional(const ojson& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

std::string EmitJson(const Report& r) {
  ojson doc = ojson::object();
  if (const auto& c = r.command_metrics) {
    doc["command_metrics"] = {{"exact_match_pct", c->exact_match_pct},
                              {"word_overlap_f1", c->word_overlap_f1},
                              {"rouge_l", c->rouge_l},
                              {"action_pct", c->action_pct},
                              {"component_pct", c->component_pct},
                              {"n", c->n}};
  }
  if (const auto& b = r.bbox) {
    doc["bbox"] = {{"top1_pct", b->top1_pct}, {"mean_iou", b->mean_iou}, {"n", b->n}};
  }
  if (const auto& s = r.structural) {
    doc["structural"] = {{"rouge_l", s->rouge_l},
                         {"word_f1", s->word_f1},
                         {"tree_edit_distance_mean", s->tree_edit_distance_mean},
                         {"css_iou_mean", s->css_iou_mean},
                         {"n", s->n},
                         {"skipped_css_declarations", s->skipped_css_declarations}};
  }
  if (const auto& h = r.human) {
    doc["human"] = {{"sr_pct", h->sr_pct}, {"ec_pct", h->ec_pct}, {"cc_pct", h->cc_pct},
                    {"total_pct", h->total_pct}, {"n", h->n}};
  }
  if (const auto& a = r.agreement) {
    doc["agreement"] = {{"sr_kappa", OptionalNumber(a->sr)},
                        {"ec_kappa", OptionalNumber(a->ec)},
                        {"cc_kappa", OptionalNumber(a->cc)},
                        {"pairs", a->pairs}};
  }
  if (const auto& m = r.correlations) {
    ojson values = ojson::array();
    for (const auto& row : m->values) {
      ojson jr = ojson::array();
      for (const auto& v : row) jr.push_back(OptionalNumber(v));
      values.push_back(std::move(jr));
    }
    doc["correlations"] = {{"rows", m->rows}, {"cols", m->cols}, {"values", values},
                           {"col_n", m->col_n}};
  }
  ojson failures = ojson::array();
  for (const RecordFailure& f : r.failures) {
    failures.push_back({{"id", f.id}, {"stage", f.stage}, {"message", f.message}});
  }
  doc["failures"] = std::move(failures);
  return doc.dump(2) + "\n";
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  const std::string lower = AsciiLower(name);
  if (lower == "json") return ReportFormat::kJson;
  if (lower == "csv") return ReportFormat::kCsv;
  if (lower == "markdown" || lower == "md") return ReportFormat::kMarkdown;
  throw Error(ErrorCode::kInvalidArgument, "unknown report format '" + std::string(name) + "'");
}

std::string EmitReport(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return EmitJson(report);
    case ReportFormat::kCsv:
      return EmitCsv(report);
    case ReportFormat::kMarkdown:
      return EmitMarkdown(report);
  }
  return {};
}

Report ParseReportJson(std::string_view text) {
  Report r;
  try {
    const ojson doc = ojson::parse(text);
    if (!doc.is_object()) throw Error(ErrorCode::kSchemaError, "report must be a JSON object");
    if (doc.contains("command_metrics")) {
      const ojson& c = doc["command_metrics"];
      r.command_metrics = CommandMetricsReport{
          c.at("exact_match_pct").get<double>(), c.at("word_overlap_f1").get<double>(),
          c.at("rouge_l").get<double>(),         c.at("action_pct").get<double>(),
          c.at("component_pct").get<double>(),   c.at("n").get<std::size_t>()};
    }
    if (doc.contains("bbox")) {
      const ojson& b = doc["bbox"];
      r.bbox = BboxSummary{b.at("top1_pct").get<double>(), b.at("mean_iou").get<double>(),
                           b.at("n").get<std::size_t>()};
    }
    if (doc.contains("structural")) {
      const ojson& s = doc["structural"];
      r.structural = StructuralSummary{
          s.at("rouge_l").get<double>(), s.at("word_f1").get<double>(),
          s.at("tree_edit_distance_mean").get<double>(), s.at("css_iou_mean").get<double>(),
          s.at("n").get<std::size_t>(), s.at("skipped_css_declarations").get<std::size_t>()};
    }
    if (doc.contains("human")) {
      const ojson& h = doc["human"];
      r.human = HumanEvalSummary{h.at("sr_pct").get<double>(), h.at("ec_pct").get<double>(),
                                 h.at("cc_pct").get<double>(), h.at("total_pct").get<double>(),
                                 h.at("n").get<std::size_t>()};
    }
    if (doc.contains("agreement")) {
      const ojson& a = doc["agreement"];
      r.agreement = AgreementSummary{ReadOptional(a.at("sr_kappa")), ReadOptional(a.at("ec_kappa")),
                                     ReadOptional(a.at("cc_kappa")),
                                     a.at("pairs").get<std::size_t>()};
    }
    if (doc.contains("correlations")) {
      const ojson& m = doc["correlations"];
      CorrelationMatrix cm;
      cm.rows = m.at("rows").get<std::vector<std::string>>();
      cm.cols = m.at("cols").get<std::vector<std::string>>();
      cm.col_n = m.at("col_n").get<std::vector<std::size_t>>();
      for (const ojson& row : m.at("values")) {
        std::vector<std::optional<double>> values;
        for (const ojson& v : row) values.push_back(ReadOptional(v));
        cm.values.push_back(std::move(values));
      }
      r.correlations = std::move(cm);
    }
    if (doc.contains("failures")) {
      for (const ojson& f : doc["failures"]) {
        r.failures.push_back({f.at("id").get<std::string>(), f.at("stage").get<std::string>(),
                              f.at("message").get<std::string>()});
      }
    }
  } catch (const ojson::exception& e) {
    throw Error(ErrorCode::kSchemaError, std::string("malformed report: ") + e.what());
  }
  return r;
}

}  // namespace docedit
