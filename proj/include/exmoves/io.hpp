#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "exmoves/classifier.hpp"
#include "exmoves/codebook.hpp"
#include "exmoves/exemplar.hpp"
#include "exmoves/video.hpp"

namespace exmoves::io {

// All formats are newline-delimited UTF-8 text with whitespace-separated
// fields. Floating-point values are written in shortest round-trip decimal
// form, so write/read cycles are bit-exact.

std::string format_double(double v);

// --- quantized videos (.qpts) ------------------------------------------
//   QPTS 1 <R> <C> <T> <K>
//   DICT <d_1> ... <d_K>
//   <r> <c> <t> <k> <codeword>        one line per point
// The video id is taken from the file name stem.
QuantizedVideo read_qpts(const std::filesystem::path& path);
void write_qpts(const std::filesystem::path& path, const QuantizedVideo& video);

// --- exemplar models and banks ------------------------------------------
ExMoveModel read_model(const std::filesystem::path& path);
void write_model(const std::filesystem::path& path, const ExMoveModel& model);

struct ExmoveBank {
    std::string id;
    std::vector<ExMoveModel> models;
};

// Bank readers enforce a consistent codebook layout across all models.
ExmoveBank read_bank(const std::filesystem::path& path);
void write_bank(const std::filesystem::path& path, const ExmoveBank& bank);

// --- training active sets -------------------------------------------------
// Persisted alongside an uncalibrated model so calibration can run as a
// separate step; each line carries the entry's label, its raw score under the
// final model, and the source volume.
void write_active_set(const std::filesystem::path& path, const ActiveSet& active,
                      const ExMoveModel& model);

struct ActiveSetFile {
    std::vector<int> labels;
    std::vector<double> scores;
    std::vector<ActiveEntry> entries; // feature vectors not stored on disk
};

ActiveSetFile read_active_set(const std::filesystem::path& path);

// --- descriptors --------------------------------------------------------
struct DescriptorFile {
    BankLayout layout;
    std::vector<std::string> video_ids;
    std::vector<std::vector<double>> rows;
};

DescriptorFile read_descriptors(const std::filesystem::path& path);
void write_descriptors(const std::filesystem::path& path, const BankLayout& layout,
                       const std::vector<std::string>& video_ids,
                       const std::vector<std::vector<double>>& rows);

// --- labels, annotations ---------------------------------------------------
std::vector<std::pair<std::string, std::string>> read_labels(const std::filesystem::path& path);
void write_labels(const std::filesystem::path& path,
                  const std::vector<std::pair<std::string, std::string>>& labels);

std::vector<ExemplarAnnotation> read_annotations(const std::filesystem::path& path);
void write_annotations(const std::filesystem::path& path,
                       const std::vector<ExemplarAnnotation>& annotations);

// Plain one-id-per-line list (train/test splits).
std::vector<std::string> read_id_list(const std::filesystem::path& path);
void write_id_list(const std::filesystem::path& path, const std::vector<std::string>& ids);

// --- codebooks ------------------------------------------------------------
Codebook read_codebook(const std::filesystem::path& path);
void write_codebook(const std::filesystem::path& path, const Codebook& codebook);

// --- raw (unquantized) feature points (.rpts) -----------------------------
//   RPTS 1 <R> <C> <T> <K>
//   VDIM <dim_1> ... <dim_K>
//   <r> <c> <t> <k> <x_1> ... <x_dim_k>
// Coordinates may be fractional and are floored to voxels on ingestion.
struct RawPoints {
    Size3 dims;
    std::vector<int> vector_dims;
    struct Point {
        int r, c, t, channel;
        std::vector<double> vector;
    };
    std::vector<Point> points;
};

RawPoints read_raw_points(const std::filesystem::path& path);

// --- classifiers and predictions -------------------------------------------
ActionClassifierBank read_classifier(const std::filesystem::path& path);
void write_classifier(const std::filesystem::path& path, const ActionClassifierBank& bank);

struct PredictionRow {
    std::string video_id;
    std::string predicted_class;
    std::vector<double> scores;
};

void write_predictions(const std::filesystem::path& path,
                       const std::vector<std::string>& classes,
                       const std::vector<PredictionRow>& rows);
std::vector<PredictionRow> read_predictions(const std::filesystem::path& path);

// --- RFE traces -------------------------------------------------------------
void write_rfe_trace(const std::filesystem::path& path, const RfeTrace& trace);
RfeTrace read_rfe_trace(const std::filesystem::path& path);

} // namespace exmoves::io
