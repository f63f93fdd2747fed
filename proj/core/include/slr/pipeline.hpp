#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slr/domination.hpp"
#include "slr/semilinear.hpp"
#include "slr/streamline.hpp"

namespace slr {

enum class HomogeneousKind : std::uint8_t { Clique, Independent };
std::string to_string(HomogeneousKind k);
HomogeneousKind parse_kind(const std::string& text);

// Per-block data of the shifted sample.
struct BlockData {
  std::vector<int> q_signs;  // sign of each row of Q, constant along the row
  Rational s;                // sum of the block's shifts
  Threshold h;
  Matrix<Integer> L;         // floor(log_Delta |Q|)
};

struct StageWidths {
  std::size_t n = 0;
  std::size_t monotone = 0;
  std::size_t cupcap = 0;
  std::size_t sample = 0;
  std::size_t clique = 0;
};

struct PipelineOptions {
  std::uint64_t budget = kDefaultBudget;       // final re-verification
  std::uint64_t cupcap_budget = 2'000'000;     // per cupcap search width
  DominationOptions domination;
};

// The streamlining and domination core shared by both entry points.
struct CoreResult {
  std::vector<Vertex> vertices;  // 1-based original vertices
  ExtractionCertificate certificate;
  std::vector<DominationStep> domination_trace;
  std::vector<Color> domination_colors;
  std::vector<BlockData> blocks;
  Rational iota;  // value substituted for the infinitesimal
  StageWidths widths;
  bool below_threshold = false;
};

struct PipelineResult {
  HomogeneousKind kind = HomogeneousKind::Clique;
  CoreResult core;

  const std::vector<Vertex>& vertices() const { return core.vertices; }
};

// Witnesses are r x N blocks of one stacked matrix; returns a set that is a
// clique or an independent set in every primitive part.
CoreResult streamline_and_dominate(const std::vector<Matrix<Rational>>& witnesses, Vertex n, unsigned r,
                                   const PipelineOptions& options = {});

PipelineResult semilinear_ramsey_extract(const LinearDescription& desc, const PipelineOptions& options = {});

struct MulticolorResult {
  std::size_t color = 0;  // 0-based index of the description
  CoreResult core;
  bool coverage_checked = false;
};

// Descriptions share their point set and together cover every r-tuple.
MulticolorResult multicolor_extract(const std::vector<LinearDescription>& descs, const PipelineOptions& options = {});

// Zero-trust checks. Each throws VerificationFailed with a reason.
// Stages are replayed on the matrix as given; an exponential stage must use
// delta when delta is positive.
void verify_stages(const Matrix<Rational>& m, const ExtractionCertificate& cert, const Rational& delta = Rational(0));
void verify_stages(const Matrix<PerturbedValue>& m, const ExtractionCertificate& cert,
                   const Rational& delta = Rational(0));
// Replays the stages on the perturbed stack of the witnesses.
void verify_certificate(const std::vector<Matrix<Rational>>& witnesses, unsigned r, const ExtractionCertificate& cert);
void verify_certificate(const LinearDescription& desc, const ExtractionCertificate& cert);
void verify_homogeneous(const OrderedHypergraph& h, std::span<const Vertex> vertices, HomogeneousKind kind,
                        std::uint64_t budget = kDefaultBudget);
void verify_pipeline_result(const LinearDescription& desc, const PipelineResult& result,
                            std::uint64_t budget = kDefaultBudget);

}  // namespace slr
