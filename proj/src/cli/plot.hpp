#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace glab::cli {

enum class PlotKind { error, gsum, hterm };

std::optional<PlotKind> parse_plot_kind(std::string_view name);

// Gnuplot script for a CSV produced by the matching subcommand. Schema
// error when the header lacks the columns the kind plots or the file has
// no data rows.
std::string emit_plot_script(const std::filesystem::path& table, PlotKind kind);

}  // namespace glab::cli
