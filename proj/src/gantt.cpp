#include <algorithm>
#include <string>
#include <vector>

#include "rrsim/io.hpp"

namespace rrsim {

namespace {

struct Cell {
  std::string label;  // pid or "--"
  std::string end;
  std::size_t width = 0;  // interior width, excluding the leading '|'
};

struct Chunk {
  std::string caption;  // "75" for a cycle, empty for an idle run
  bool idle = false;
  std::vector<Cell> cells;

  std::size_t span() const {
    std::size_t s = 0;
    for (const auto& c : cells) s += c.width + 1;
    return s;
  }
};

std::string banner(const Chunk& chunk) {
  const std::size_t span = chunk.span();
  if (chunk.idle) {
    const std::string text = "idle";
    const std::size_t left = (span - text.size()) / 2;
    return std::string(left, ' ') + text + std::string(span - left - text.size(), ' ');
  }
  const std::string text = " " + chunk.caption + " ";
  const std::size_t dashes = span - text.size() - 2;
  return "<" + std::string(dashes / 2, '-') + text + std::string(dashes - dashes / 2, '-') + ">";
}

/// Widens the last cell until the caption fits over the chunk.
void fit_caption(Chunk& chunk) {
  const std::size_t needed = chunk.idle ? 4 : chunk.caption.size() + 4;
  const std::size_t span = chunk.span();
  if (span < needed) chunk.cells.back().width += needed - span;
}

}  // namespace

std::string render_gantt(const ExecutionTrace& trace, std::size_t width) {
  width = std::max<std::size_t>(width, 40);

  // Chronological walk over slices and idle gaps, one chunk per cycle.
  struct Item {
    Millis start, end;
    const Slice* slice;
  };
  std::vector<Item> items;
  for (const auto& s : trace.slices) items.push_back({s.start, s.end, &s});
  for (const auto& g : trace.idles) items.push_back({g.start, g.end, nullptr});
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.start < b.start; });

  std::vector<Chunk> chunks;
  int current_cycle = -1;
  for (const auto& item : items) {
    Cell cell{item.slice ? item.slice->pid : "--", std::to_string(item.end), 0};
    cell.width = std::max(cell.label.size(), cell.end.size()) + 1;
    const bool idle = item.slice == nullptr;
    const int cycle = idle ? -1 : item.slice->cycle;
    const bool starts_chunk = chunks.empty() || chunks.back().idle != idle || (!idle && cycle != current_cycle) ||
                              chunks.back().span() + cell.width + 2 > width;
    if (starts_chunk) {
      Chunk chunk;
      chunk.idle = idle;
      if (!idle) chunk.caption = std::to_string(item.slice->quantum);
      chunks.push_back(std::move(chunk));
    }
    current_cycle = cycle;
    chunks.back().cells.push_back(std::move(cell));
  }
  for (auto& c : chunks) fit_caption(c);

  std::string out;
  std::size_t i = 0;
  while (i < chunks.size()) {
    std::string banner_row, cell_row, label_row;
    std::size_t used = 1;  // closing '|'
    do {
      const auto& chunk = chunks[i];
      banner_row += banner(chunk);
      for (const auto& cell : chunk.cells) {
        cell_row += "|" + cell.label + std::string(cell.width - cell.label.size(), ' ');
        label_row += std::string(cell.width + 1 - cell.end.size(), ' ') + cell.end;
      }
      used += chunk.span();
      ++i;
    } while (i < chunks.size() && used + chunks[i].span() <= width);
    cell_row += "|";
    while (!banner_row.empty() && banner_row.back() == ' ') banner_row.pop_back();
    if (!out.empty()) out += "\n";
    out += banner_row + "\n" + cell_row + "\n" + label_row + "\n";
  }
  return out;
}

}  // namespace rrsim
