// Copyright 2026 The canvasa11y Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "canvasa11y/textmap.h"

#include <algorithm>
#include <limits>
#include <numeric>

namespace canvasa11y {
namespace {

struct Cluster {
  BoundingBox bbox;
  std::vector<std::size_t> members;
};

int HorizontalGap(const BoundingBox& a, const BoundingBox& b) {
  return std::max(0, std::max(a.min_x, b.min_x) - std::min(a.max_x, b.max_x) - 1);
}

bool VerticalOverlap(const BoundingBox& a, const BoundingBox& b) {
  return a.min_y <= b.max_y && b.min_y <= a.max_y;
}

std::vector<Cluster> BuildClusters(std::span<const Region> letters) {
  std::vector<std::size_t> parent(letters.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      const auto& a = letters[i].bbox;
      const auto& b = letters[j].bbox;
      if (VerticalOverlap(a, b) && HorizontalGap(a, b) <= kLetterClusterGap) {
        parent[find(i)] = find(j);
      }
    }
  }
  std::vector<Cluster> clusters;
  std::vector<std::ptrdiff_t> slot(letters.size(), -1);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(clusters.size());
      clusters.push_back({letters[i].bbox, {}});
    }
    Cluster& c = clusters[slot[root]];
    c.bbox = c.bbox.Union(letters[i].bbox);
    c.members.push_back(i);
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    return std::tie(a.bbox.min_y, a.bbox.min_x) < std::tie(b.bbox.min_y, b.bbox.min_x);
  });
  return clusters;
}

int DistanceToBox(Point p, const BoundingBox& b) {
  const int dx = std::max({b.min_x - p.x, 0, p.x - b.max_x});
  const int dy = std::max({b.min_y - p.y, 0, p.y - b.max_y});
  return std::max(dx, dy);
}

BoundingBox ApproximateTextBox(const std::string& text, Point origin,
                               TextAlign align) {
  const int width = std::max(1, kApproxGlyphWidth * static_cast<int>(text.size()));
  int left = origin.x;
  if (align == TextAlign::kCenter) left = origin.x - width / 2;
  if (align == TextAlign::kRight || align == TextAlign::kEnd) left = origin.x - width;
  return {left, origin.y - kApproxTextHeight, left + width - 1, origin.y - 1};
}

}  // namespace

std::vector<LetterCluster> ClusterLetters(std::span<const Region> letters) {
  std::vector<LetterCluster> out;
  for (const auto& c : BuildClusters(letters)) {
    out.push_back({c.bbox, static_cast<int>(c.members.size())});
  }
  return out;
}

TextResolution ResolveText(std::span<const Region> letter_regions,
                           const CanvasTrace& trace,
                           std::span<const WidgetNode> widgets) {
  const auto clusters = BuildClusters(letter_regions);
  std::vector<bool> used(clusters.size(), false);
  std::vector<bool> has_value(widgets.size(), false);

  TextResolution out;
  for (std::size_t i = 0; i < trace.commands.size(); ++i) {
    const DrawCommand& cmd = trace.commands[i];
    if (!cmd.is_text()) continue;
    const auto& args = std::get<TextArgs>(cmd.args);
    const Point origin = cmd.anchor();

    std::optional<std::size_t> match;
    int best = std::numeric_limits<int>::max();
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      const int d = DistanceToBox(origin, clusters[c].bbox);
      if (d <= kNearMargin && d < best) {
        best = d;
        match = c;
      }
    }

    TextAssignment a;
    a.text = args.text;
    a.origin = origin;
    a.seq = cmd.seq;
    if (match) {
      used[*match] = true;
      a.text_bbox = clusters[*match].bbox;
    } else {
      a.text_bbox = ApproximateTextBox(args.text, origin, trace.AlignmentAt(i));
    }
    for (std::size_t w = 0; w < widgets.size(); ++w) {
      if (!has_value[w] && widgets[w].bbox.Contains(a.text_bbox)) {
        has_value[w] = true;
        a.widget = w;
        a.role = TextRole::kValue;
        break;
      }
    }
    out.assignments.push_back(std::move(a));
  }
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (!used[c]) out.unresolved_letters.push_back(clusters[c].bbox);
  }
  return out;
}

}  // namespace canvasa11y
