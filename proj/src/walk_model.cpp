#include <algorithm>

#include "stripwalk/errors.hpp"
#include "stripwalk/oracle.hpp"

namespace stripwalk {

WalkModel::WalkModel(std::string name, std::vector<Step> steps) : name_(std::move(name)), steps_(std::move(steps)) {
  if (steps_.empty()) throw Error(Errc::invalid_model, "empty step set");
  for (std::size_t a = 0; a < steps_.size(); ++a) {
    if (steps_[a].dx == 0) throw Error(Errc::invalid_model, "step with dx = 0");
    for (std::size_t b = a + 1; b < steps_.size(); ++b) {
      if (steps_[a] == steps_[b]) throw Error(Errc::invalid_model, "duplicate step");
    }
  }
}

WalkModel WalkModel::soccer() { return WalkModel("soccer", {{1, 1}, {1, -1}}); }

WalkModel WalkModel::basketball() { return WalkModel("basketball", {{1, 1}, {1, -1}, {2, 2}, {2, -2}}); }

WalkModel WalkModel::general_p(unsigned p) {
  return WalkModel("general-p(p=" + std::to_string(p) + ")",
                   {{1, 1}, {1, -1}, {p, 2}, {p, -2}});
}

unsigned WalkModel::max_dx() const noexcept {
  unsigned m = 0;
  for (const auto& s : steps_) m = std::max(m, s.dx);
  return m;
}

bool WalkModel::closed_walks_even() const noexcept {
  return std::all_of(steps_.begin(), steps_.end(), [](const Step& s) {
    return (static_cast<long>(s.dx) - s.dy) % 2 == 0;
  });
}

}  // namespace stripwalk
