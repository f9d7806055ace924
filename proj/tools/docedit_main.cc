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

// docedit: evaluation and pipeline driver.
//
// Exit status: 0 success, 1 fatal error, 2 usage error, 3 when --strict is
// given and at least one record failed.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "docedit/backend.h"
#include "docedit/dataset.h"
#include "docedit/error.h"
#include "docedit/evaluation.h"
#include "docedit/human_eval.h"
#include "docedit/image.h"
#include "docedit/io.h"
#include "docedit/pipeline.h"
#include "docedit/render.h"
#include "docedit/report.h"
#include "docedit/seg_io.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using docedit::Error;

struct GlobalFlags {
  std::string config;
  std::string out;
  std::string format = "json";
  bool strict = false;
};

struct PipelineFlagsCli {
  std::string dataset;
  bool no_grounding = false;
  bool no_reformulation = false;
  int workers = 0;  // 0: backend max_concurrency
  std::string templates;
  std::string fixtures;
  std::string record_fixtures;
};

void PrintIssues(const docedit::Dataset& ds) {
  for (const docedit::DatasetIssue& issue : ds.issues) {
    std::cerr << "warning: dataset line " << issue.line << ": " << issue.message << "\n";
  }
}

docedit::Dataset Load(const std::string& path) {
  docedit::Dataset ds = docedit::LoadDataset(path);
  PrintIssues(ds);
  return ds;
}

int EmitAndFinish(const GlobalFlags& g, const docedit::Report& report, const char* stem) {
  const docedit::ReportFormat format = docedit::ParseReportFormat(g.format);
  const std::string bytes = docedit::EmitReport(report, format);
  std::cout << bytes;
  if (!g.out.empty()) {
    const char* ext = format == docedit::ReportFormat::kJson  ? ".json"
                      : format == docedit::ReportFormat::kCsv ? ".csv"
                                                              : ".md";
    docedit::WriteFileAtomic(fs::path(g.out) / (std::string(stem) + ext), bytes);
  }
  for (const docedit::RecordFailure& f : report.failures) {
    std::cerr << "record " << f.id << " (" << f.stage << "): " << f.message << "\n";
  }
  return g.strict && !report.failures.empty() ? 3 : 0;
}

docedit::BackendConfig ResolveBackend(const GlobalFlags& g, const PipelineFlagsCli& p) {
  docedit::BackendConfig config =
      g.config.empty() ? docedit::BackendConfig{} : docedit::LoadBackendConfig(g.config);
  if (!p.fixtures.empty()) {
    config.mode = docedit::BackendMode::kMock;
    config.fixtures = p.fixtures;
  }
  return config;
}

int RunPipelineCommand(const GlobalFlags& g, const PipelineFlagsCli& p, docedit::PipelineTask task) {
  const docedit::Dataset ds = Load(p.dataset);
  const docedit::BackendConfig config = ResolveBackend(g, p);
  std::cerr << "backend: " << docedit::DescribeConfig(config) << "\n";
  std::unique_ptr<docedit::LmmBackend> backend = docedit::MakeBackend(config);
  std::unique_ptr<docedit::RecordingBackend> recorder;
  docedit::LmmBackend* active = backend.get();
  if (!p.record_fixtures.empty()) {
    recorder = std::make_unique<docedit::RecordingBackend>(backend.get());
    active = recorder.get();
  }

  docedit::PipelineOptions options;
  options.task = task;
  options.flags.use_grounding = !p.no_grounding;
  options.flags.use_reformulation = !p.no_reformulation;
  options.out_dir = g.out.empty() ? fs::path("out") : fs::path(g.out);
  options.workers = p.workers > 0 ? p.workers : config.max_concurrency;
  if (!p.templates.empty()) options.templates = docedit::TemplateSet::LoadDirectory(p.templates);

  const docedit::PipelineSummary summary = docedit::RunPipeline(ds.records, *active, options);
  if (recorder) docedit::WriteFileAtomic(p.record_fixtures, recorder->FixturesJson());

  for (const docedit::RecordOutcome& o : summary.outcomes) {
    if (o.status == docedit::RecordStatus::kFailed) {
      std::cerr << "record " << o.id << ": " << o.error << "\n";
    }
  }
  std::cerr << summary.completed << " completed, " << summary.skipped << " skipped, "
            << summary.failed << " failed; outputs in " << options.out_dir.string() << "\n";
  return g.strict && summary.failed > 0 ? 3 : 0;
}

void AddPipelineOptions(CLI::App* cmd, PipelineFlagsCli* p, bool reformulation_flag) {
  cmd->add_option("dataset", p->dataset, "JSONL dataset")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--no-grounding", p->no_grounding, "Send the unmarked image, omit the box clause");
  if (reformulation_flag) {
    cmd->add_flag("--no-reformulation", p->no_reformulation,
                  "Use the predicted command directly as the instruction");
  }
  cmd->add_option("--workers", p->workers, "Records processed in parallel")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--templates", p->templates, "Directory overriding the built-in templates")
      ->check(CLI::ExistingDirectory);
  cmd->add_option("--fixtures", p->fixtures, "Replay responses from this fixture file (mock mode)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--record-fixtures", p->record_fixtures,
                  "Write every prompt/response exchange to this fixture file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Document editing evaluation and pipeline tools"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--config", g.config, "Backend config file (key = value)")
      ->check(CLI::ExistingFile);
  app.add_option("--out", g.out, "Output directory");
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
  app.add_flag("--strict", g.strict, "Exit 3 when any record fails");

  std::string dataset;
  auto* eval_commands = app.add_subcommand("eval-commands", "Command generation metrics");
  auto* eval_bbox = app.add_subcommand("eval-bbox", "Grounding Top-1 accuracy and mean IoU");
  auto* eval_html = app.add_subcommand("eval-html", "ROUGE-L, F1, tree edit distance, CSS IoU");
  auto* report = app.add_subcommand("report", "Every metric the dataset supports");
  auto* stats = app.add_subcommand("stats", "Human evaluation, kappa and correlations");
  bool unscoped_css = false;
  double top1_threshold = docedit::kTop1Threshold;
  double percentile = 95.0;
  int eval_workers = 4;
  for (CLI::App* cmd : {eval_commands, eval_bbox, eval_html, report, stats}) {
    cmd->add_option("dataset", dataset, "JSONL dataset")->required()->check(CLI::ExistingFile);
  }
  for (CLI::App* cmd : {eval_html, report, stats}) {
    cmd->add_flag("--css-ignore-scope", unscoped_css, "Pool CSS pairs without their selector");
    cmd->add_option("--workers", eval_workers, "Documents compared in parallel")
        ->check(CLI::PositiveNumber);
  }
  for (CLI::App* cmd : {eval_bbox, report}) {
    cmd->add_option("--threshold", top1_threshold, "Top-1 IoU threshold (inclusive)")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--percentile", percentile, "Mask radius percentile")
        ->check(CLI::Range(0.0, 100.0));
  }

  PipelineFlagsCli reformulate_flags, edit_flags, replicate_flags;
  auto* reformulate = app.add_subcommand("reformulate", "Rewrite commands into instructions");
  AddPipelineOptions(reformulate, &reformulate_flags, false);
  auto* edit = app.add_subcommand("edit", "Run the editing pipeline");
  AddPipelineOptions(edit, &edit_flags, true);
  auto* replicate = app.add_subcommand("replicate", "Image-to-HTML replication of record images");
  AddPipelineOptions(replicate, &replicate_flags, false);

  std::string mask_path;
  auto* mask_to_bbox = app.add_subcommand("mask-to-bbox", "RoI box of a class-index map");
  mask_to_bbox->add_option("mask", mask_path, ".png or .segf32 map")
      ->required()
      ->check(CLI::ExistingFile);
  mask_to_bbox->add_option("--percentile", percentile, "Mask radius percentile")
      ->check(CLI::Range(0.0, 100.0));

  std::string banner_image, banner_request, banner_output;
  auto* banner = app.add_subcommand("banner", "Stack the rendered request above a page image");
  banner->add_option("image", banner_image, "Page PNG")->required()->check(CLI::ExistingFile);
  banner->add_option("request", banner_request, "Request text")->required();
  banner->add_option("-o,--output", banner_output, "Output PNG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    docedit::EvaluationOptions eval;
    eval.css.keep_scope = !unscoped_css;
    eval.top1_threshold = top1_threshold;
    eval.mask.radius_percentile = percentile;
    eval.workers = eval_workers;

    if (*eval_commands) {
      const docedit::Dataset ds = Load(dataset);
      docedit::Report r;
      r.command_metrics = docedit::EvaluateCommands(ds.records);
      if (!r.command_metrics) throw Error(docedit::ErrorCode::kEmptyCorpus, "no command pairs");
      return EmitAndFinish(g, r, "commands");
    }
    if (*eval_bbox) {
      const docedit::Dataset ds = Load(dataset);
      docedit::Report r;
      r.bbox = docedit::EvaluateBoxes(ds.records, eval, &r.failures);
      if (!r.bbox) throw Error(docedit::ErrorCode::kEmptyCorpus, "no usable box pairs");
      return EmitAndFinish(g, r, "bbox");
    }
    if (*eval_html) {
      const docedit::Dataset ds = Load(dataset);
      docedit::Report r;
      const auto html = docedit::CompareRecordHtml(ds.records, eval, &r.failures);
      r.structural = docedit::SummarizeHtml(html);
      if (!r.structural) throw Error(docedit::ErrorCode::kEmptyCorpus, "no usable HTML pairs");
      return EmitAndFinish(g, r, "html");
    }
    if (*report) {
      const docedit::Dataset ds = Load(dataset);
      return EmitAndFinish(g, docedit::EvaluateAll(ds.records, eval), "report");
    }
    if (*stats) {
      const docedit::Dataset ds = Load(dataset);
      docedit::Report r;
      r.human = docedit::AggregateHumanEval(ds.records);
      r.agreement = docedit::PooledAgreement(ds.records);
      const auto html = docedit::CompareRecordHtml(ds.records, eval, &r.failures);
      r.correlations = docedit::CorrelateMetrics(ds.records, html);
      return EmitAndFinish(g, r, "stats");
    }
    if (*reformulate) {
      return RunPipelineCommand(g, reformulate_flags, docedit::PipelineTask::kReformulate);
    }
    if (*edit) return RunPipelineCommand(g, edit_flags, docedit::PipelineTask::kEdit);
    if (*replicate) return RunPipelineCommand(g, replicate_flags, docedit::PipelineTask::kReplicate);
    if (*mask_to_bbox) {
      const docedit::BoundingBox box =
          docedit::MaskToBox(docedit::LoadLabelMap(mask_path), {percentile});
      const nlohmann::ordered_json j = {{"x", box.x}, {"y", box.y}, {"h", box.h}, {"w", box.w}};
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*banner) {
      const docedit::RasterImage page = docedit::ReadPng(banner_image);
      docedit::WritePng(banner_output, docedit::RenderRequestBanner(page, banner_request));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
