#include <gtest/gtest.h>

#include <random>

#include "slab/error.hpp"
#include "slab/ring_spec.hpp"

namespace slab {
namespace {

TEST(Parse, Goldens) {
  const RingSpecAst zn = parse_ring_spec("Z12");
  EXPECT_EQ(zn.kind, RingSpecAst::Kind::zn);
  EXPECT_EQ(zn.modulus, 12U);

  const RingSpecAst prod = parse_ring_spec("Z2xZ3");
  EXPECT_EQ(prod.kind, RingSpecAst::Kind::product);
  EXPECT_EQ(evaluate(prod).order(), 6U);

  const RingSpecAst quot = parse_ring_spec("Z12/(6)");
  EXPECT_EQ(quot.kind, RingSpecAst::Kind::quotient);
  EXPECT_EQ(quot.generators, std::vector<std::size_t>{6});
  EXPECT_TRUE(find_isomorphism(evaluate(quot), make_zn(6)).has_value());
}

TEST(Parse, LeftAssociativeProducts) {
  const RingSpecAst ast = parse_ring_spec("Z2xZ3xZ2");
  ASSERT_EQ(ast.kind, RingSpecAst::Kind::product);
  EXPECT_EQ(ast.left->kind, RingSpecAst::Kind::product);
  EXPECT_EQ(ast.right->kind, RingSpecAst::Kind::zn);
}

TEST(Parse, PostfixBindsTighterThanProduct) {
  const RingSpecAst ast = parse_ring_spec("Z2xZ4/(2)");
  ASSERT_EQ(ast.kind, RingSpecAst::Kind::product);
  EXPECT_EQ(ast.right->kind, RingSpecAst::Kind::quotient);
  EXPECT_EQ(evaluate(ast).order(), 4U);
  const RingSpecAst idl = parse_ring_spec("Z2xZ2(+)self");
  EXPECT_EQ(idl.right->kind, RingSpecAst::Kind::idealization);
  EXPECT_EQ(evaluate(idl).order(), 8U);
}

TEST(Parse, Grouping) {
  const FiniteRing r = parse_ring("(Z2xZ2)(+)self");
  EXPECT_EQ(r.order(), 16U);
  const FiniteRing p = parse_ring("Z2xZ3");
  EXPECT_EQ(p.name(Element{2}), "(0 mod 2, 1 mod 3)");
  EXPECT_EQ(p.name(Element{4}), "(1 mod 2, 0 mod 3)");
  EXPECT_EQ(parse_ring("(Z2xZ3)/(2)").order(), 2U);
  EXPECT_EQ(parse_ring("(Z2xZ3)/(4)").order(), 3U);
  EXPECT_EQ(parse_ring("Z4(+)Z2").order(), 8U);
  EXPECT_EQ(parse_ring(" Z6 x Z2 ").order(), 12U);
}

TEST(Parse, RejectsMalformed) {
  for (const char* bad : {"", "Z", "Z0x", "Y3", "Z3x", "Z3/(", "Z3/()", "Z3/(1,)", "(Z3", "Z3)",
                          "Z3(+)", "Z3(+)Q", "Z3 Z3", "Z-3", "Z3/1"}) {
    EXPECT_THROW((void)parse_ring_spec(bad), SyntaxError) << bad;
  }
  try {
    (void)parse_ring_spec("Z2xY");
    FAIL();
  } catch (const SyntaxError& err) {
    EXPECT_EQ(err.position(), 3U);
  }
}

TEST(Evaluate, Errors) {
  EXPECT_THROW((void)parse_ring("Z40"), Error);
  EXPECT_NO_THROW((void)parse_ring("Z40", 64));
  EXPECT_THROW((void)parse_ring("Z6xZ6"), Error);
  EXPECT_THROW((void)parse_ring("Z6/(1)"), Error);
  EXPECT_THROW((void)parse_ring("Z6/(9)"), Error);
  EXPECT_THROW((void)parse_ring("Z1"), Error);
}

TEST(IndexList, Forms) {
  EXPECT_EQ(parse_index_list("1,2"), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(parse_index_list("{1, 2}"), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(parse_index_list("(3)"), (std::vector<std::size_t>{3}));
  EXPECT_THROW((void)parse_index_list("1,,2"), SyntaxError);
  EXPECT_THROW((void)to_elements(make_zn(4), {5}), Error);
}

std::string random_spec(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 0);
  switch (pick(rng)) {
    case 1:
      return random_spec(rng, depth - 1) + "x" + random_spec(rng, depth - 1);
    case 2:
      return "(" + random_spec(rng, depth - 1) + ")/(" + std::to_string(rng() % 7) + ")";
    case 3:
      return "(" + random_spec(rng, depth - 1) + ")(+)self";
    case 4:
      return "Z" + std::to_string(2 + rng() % 9) + "(+)Z" + std::to_string(2 + rng() % 3);
    default:
      return "Z" + std::to_string(2 + rng() % 20);
  }
}

TEST(RoundTrip, FuzzedRendersReparse) {
  std::mt19937 rng(20261016);
  for (int k = 0; k < 2000; ++k) {
    const std::string text = random_spec(rng, 3);
    const RingSpecAst ast = parse_ring_spec(text);
    const std::string rendered = render(ast);
    const RingSpecAst again = parse_ring_spec(rendered);
    EXPECT_EQ(render(again), rendered) << text;
    std::optional<FiniteRing> a;
    std::optional<FiniteRing> b;
    try {
      a = evaluate(ast, 64);
    } catch (const Error&) {
    }
    try {
      b = evaluate(again, 64);
    } catch (const Error&) {
    }
    ASSERT_EQ(a.has_value(), b.has_value()) << text;
    if (a) {
      EXPECT_EQ(a->recipe(), b->recipe());
      EXPECT_EQ(a->tables().mul, b->tables().mul);
    }
  }
}

TEST(RoundTrip, RecipesReparse) {
  for (const char* text : {"Z12", "Z2xZ3", "Z12/(6)", "(Z2xZ2)(+)self", "Z4(+)Z2", "Z2x(Z3xZ2)"}) {
    const FiniteRing r = parse_ring(text);
    const FiniteRing again = parse_ring(r.recipe());
    EXPECT_EQ(r.tables().mul, again.tables().mul) << text;
  }
}

}  // namespace
}  // namespace slab
