#include "heptad/develop.hpp"

#include "heptad/errors.hpp"

namespace heptad {

void validate_starters(const StarterSet& s) {
  if (s.modulus < 0) throw InvalidStarter("negative modulus");
  for (const Starter& st : s.starters) {
    if (st.orbit < 1 || s.modulus % st.orbit != 0)
      throw InvalidStarter("orbit length must divide the modulus");
    for (Vertex l : st.block.labels) {
      if (l == kInf) {
        if (!s.has_infinity)
          throw InvalidStarter("fixed point used without infinity");
      } else if (l < 0 || l >= s.modulus) {
        throw InvalidStarter("starter label out of range");
      }
    }
  }
}

namespace {

template <typename Emit>
void develop_impl(const StarterSet& s, Emit emit) {
  validate_starters(s);
  for (const Starter& st : s.starters) {
    for (int i = 0; i < st.orbit; ++i) {
      std::array<Vertex, 7> labels{};
      for (int j = 0; j < 7; ++j) {
        Vertex l = st.block.labels[j];
        labels[j] = (l == kInf) ? s.modulus : (l + i) % s.modulus;
      }
      emit(st.block.cls, labels);
    }
  }
}

}  // namespace

std::vector<Block> develop(const StarterSet& s) {
  std::vector<Block> out;
  develop_impl(s, [&](int cls, const std::array<Vertex, 7>& labels) {
    out.push_back(Block{cls, labels});
  });
  return out;
}

std::vector<UBlock> develop_cycles(const StarterSet& s) {
  std::vector<UBlock> out;
  develop_impl(s, [&](int, const std::array<Vertex, 7>& labels) {
    out.push_back(UBlock{UKind::C7, {labels.begin(), labels.end()}});
  });
  return out;
}

}  // namespace heptad
