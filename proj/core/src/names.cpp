#include "splitq/matrices.hpp"
#include "splitq/split_quaternion.hpp"

namespace splitq {

std::string_view to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Lightlike: return "lightlike";
  }
  return "unknown";
}

std::string_view to_string(RankCase c) {
  switch (c) {
    case RankCase::NonSingular: return "NonSingular";
    case RankCase::Rank2: return "Rank2";
    case RankCase::Rank3: return "Rank3";
    case RankCase::Rank1: return "Rank1";
    case RankCase::Rank3a: return "Rank3a";
    case RankCase::Rank3b: return "Rank3b";
    case RankCase::Rank3c: return "Rank3c";
    case RankCase::Rank2b: return "Rank2b";
    case RankCase::Degenerate: return "Degenerate";
  }
  return "unknown";
}

int advertised_rank(RankCase c) {
  switch (c) {
    case RankCase::NonSingular: return 4;
    case RankCase::Rank1: return 1;
    case RankCase::Rank2:
    case RankCase::Rank2b: return 2;
    case RankCase::Rank3:
    case RankCase::Rank3a:
    case RankCase::Rank3b:
    case RankCase::Rank3c: return 3;
    case RankCase::Degenerate: return -1;
  }
  return -1;
}

}  // namespace splitq
