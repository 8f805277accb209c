#include "permpath/lattice_path.hpp"

#include <algorithm>

#include "permpath/errors.hpp"

namespace permpath {

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'U' || c == 'u') {
      steps.push_back(Step::Up);
    } else if (c == 'D' || c == 'd') {
      steps.push_back(Step::Down);
    } else if (c != ' ' && c != ',' && c != '\t' && c != '\n') {
      throw InvalidInput("unexpected character '" + std::string(1, c) + "' at column " +
                         std::to_string(i + 1) + " in path '" + std::string(text) + "'");
    }
  }
  return LatticePath(std::move(steps));
}

LatticePath LatticePath::from_runs(std::span<const int> ascents, std::span<const int> descents) {
  if (ascents.size() != descents.size())
    throw InvalidInput("ascent and descent sequences differ in length");
  std::vector<Step> steps;
  for (std::size_t i = 0; i < ascents.size(); ++i) {
    if (ascents[i] <= 0 || descents[i] <= 0) throw InvalidInput("run lengths must be positive");
    steps.insert(steps.end(), static_cast<std::size_t>(ascents[i]), Step::Up);
    steps.insert(steps.end(), static_cast<std::size_t>(descents[i]), Step::Down);
  }
  return LatticePath(std::move(steps));
}

int LatticePath::ups() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Up));
}

int LatticePath::downs() const { return length() - ups(); }

bool LatticePath::first_quadrant() const {
  int h = 0;
  for (Step s : steps_) {
    h += s == Step::Up ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

bool LatticePath::dyck() const { return first_quadrant() && final_height() == 0; }

std::string LatticePath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s += static_cast<char>(st);
  return s;
}

PathStats path_stats(const LatticePath& p) {
  PathStats s;
  auto steps = p.steps();
  s.starts_up = steps.empty() || steps.front() == Step::Up;
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step st = steps[i];
    h += st == Step::Up ? 1 : -1;
    s.height = std::max(s.height, h);
    if (st == Step::Down && h == 0) ++s.returns;
    auto& runs = st == Step::Up ? s.ascent_seq : s.descent_seq;
    if (i > 0 && steps[i - 1] == st)
      ++runs.back();
    else
      runs.push_back(1);
  }
  if (!steps.empty() && steps.back() == Step::Down && h == 0) s.interior_returns = s.returns - 1;
  else s.interior_returns = s.returns;
  if (!steps.empty() && steps.front() == Step::Up) s.first_ascent = s.ascent_seq.front();
  if (!steps.empty() && steps.back() == Step::Down) s.last_descent = s.descent_seq.back();
  return s;
}

std::span<const int> noninitial_ascents(const PathStats& s) {
  std::span<const int> a = s.ascent_seq;
  if (s.starts_up && !a.empty()) a = a.subspan(1);
  return a;
}

std::span<const int> nonfinal_descents(const PathStats& s) {
  std::span<const int> d = s.descent_seq;
  if (s.last_descent > 0) d = d.first(d.size() - 1);
  return d;
}

}  // namespace permpath
