#pragma once

#include <string>

#include "mjack/linalg.hpp"
#include "mjack/partitions.hpp"

namespace mjack {

enum class TableKind { C, Marginal, D, H, A, ATilde };
/// Text is an aligned plain layout, available for matrices only.
enum class Format { Json, Csv, Latex, Text };

/// Size limits for whole-table emission; GuardExceeded beyond them.
inline constexpr int kCoeffTableGuard = 8;
inline constexpr int kCumulantTableGuard = 6;

TableKind parse_table_kind(const std::string& s);
Format parse_format(const std::string& s);

/// Every entry of the requested table at size n, indices increasing.
std::string emit_table(int n, TableKind kind, Format format);

std::string emit_matrix(const LabeledMatrix& m, Format format);

/// "[3,1^{2}]" style, exponent for repeated parts.
std::string latex_partition(const Partition& p);

} // namespace mjack
