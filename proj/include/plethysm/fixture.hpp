#ifndef PLETHYSM_FIXTURE_HPP_
#define PLETHYSM_FIXTURE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "decorate.hpp"

namespace plethysm {

  //! Contents of a fixture file. Everything is FinSet; callers linearize
  //! for a FinVect target. Weight rows are kept as rationals per el(ρ)
  //! object and element of REP.
  struct Fixture {
    std::string                                         name = "fixture";
    CatPtr                                              action;
    std::optional<Bimodule>                             bimodule;
    std::optional<Monoid>                               monoid;
    ElPtr                                               el;
    std::optional<ElementRep>                           rep;
    std::optional<DecorationMonoid>                     decor;
    std::optional<std::vector<std::vector<mpq_class>>>  weight;
  };

  //! Line-oriented sections:
  //!   OBJECTS    ids, any number per line
  //!   MORPHISMS  <id> <src> <tgt> [identity]
  //!   COMPOSE    <g> <f> <g∘f>, for every composable non-identity pair
  //!   BIMODULE [name]
  //!              V <A> <B> <elements...>
  //!              L <s> <B> <images...>    ρ(tgt s, B) -> ρ(src s, B)
  //!              R <A> <t> <images...>    ρ(A, src t) -> ρ(A, tgt t)
  //!   GAMMA      <A> <B> <C> <x> <y> <z>
  //!   ETA        <A> <x>
  //!   REP / DECOR
  //!              V <A> <B> <x> <elements...>
  //!              M <s> <t> <x> <images...>   action of the lift of (s|t) at x
  //!              P <A> <B> <C> <x> <y> <u> <v> <w>   (DECOR only)
  //!   WEIGHT     <A> <B> <x> <q...>, one rational per element of REP(x)
  //! `#` starts a comment. Errors are ErrorCode::parse with line and column.
  Fixture parse_fixture(std::string_view text);
  Fixture load_fixture(std::string const& path);

  //! Canonical text; parse_fixture(emit_fixture(f)) emits the same bytes.
  std::string emit_fixture(Fixture const& f);

  //! Linearized REP with the weight rows as a map to the trivial rep.
  RepMap weight_map(Fixture const& f, ElementRep const& vect_rep);
  ElementRep linearize(ElementRep const& d);

}  // namespace plethysm

#endif  // PLETHYSM_FIXTURE_HPP_
