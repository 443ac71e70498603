#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <sstream>

#include "hlineq/errors.hpp"
#include "hlineq/json_io.hpp"

namespace hlineq {
namespace {

bool bit_equal(const MultilinearForm& a, const MultilinearForm& b) {
  if (a.order() != b.order() || a.dim() != b.dim()) return false;
  return std::memcmp(a.coeffs().data(), b.coeffs().data(), a.size() * sizeof(double)) == 0;
}

TEST(FormJsonTest, RoundTripIsBitExact) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Distribution dist = static_cast<Distribution>(seed % 3);
    const MultilinearForm t = random_form(1 + static_cast<int>(seed % 4), 3, dist, seed);
    EXPECT_TRUE(bit_equal(form_from_json(Json::parse(form_to_json(t).dump())), t));
  }
  const MultilinearForm tiny(1, 3, {5e-324, -1.7976931348623157e308, 0.1});
  EXPECT_TRUE(bit_equal(form_from_json(Json::parse(form_to_json(tiny).dump())), tiny));
}

TEST(FormJsonTest, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "hlineq_form_test.json").string();
  const MultilinearForm t = random_form(3, 2, Distribution::Gaussian, 4);
  write_form_file(path, t);
  EXPECT_TRUE(bit_equal(read_form_file(path), t));
  std::filesystem::remove(path);
  EXPECT_THROW(read_form_file(path), ArgumentError);
}

TEST(FormJsonTest, Errors) {
  EXPECT_THROW(form_from_json(Json::parse(R"({"m":2,"n":2,"coeffs":[1,2,3]})")), ArgumentError);
  EXPECT_THROW(form_from_json(Json::parse(R"({"m":2,"coeffs":[1,2,3,4]})")), ArgumentError);
  EXPECT_THROW(form_from_json(Json::parse(R"({"m":2,"n":2,"coeffs":[1,2,"x",4]})")), ArgumentError);
  EXPECT_THROW(form_from_json(Json::parse("[1,2]")), ArgumentError);
}

TEST(RealJsonTest, InfinityAndNan) {
  EXPECT_EQ(real_to_json(kInfinity), "inf");
  EXPECT_TRUE(real_to_json(NAN).is_null());
  EXPECT_EQ(real_to_json(1.5), 1.5);
  EXPECT_TRUE(exponent_from_json(Json("inf")).is_infinite());
  EXPECT_EQ(exponent_from_json(Json(2.5)).value(), 2.5);
  EXPECT_THROW(exponent_from_json(Json(0.5)), ArgumentError);
  const ExponentVector p{Exponent(4.0), Exponent::infinity()};
  EXPECT_EQ(exponents_to_json(p).dump(), R"([4.0,"inf"])");
  EXPECT_EQ(format_exponent_list(p), "4:inf");
}

TEST(SweepCsvTest, HeaderAndRow) {
  CellResult c;
  c.cell = {3, {RegimeKind::NewIsotropic, ExponentVector(2, Exponent(4.0))}};
  c.max_ratio = 1.25;
  c.bound = 1.5;
  c.margin = 0.25;
  c.pass = true;
  std::ostringstream os;
  write_sweep_csv(os, {c});
  EXPECT_EQ(os.str(), std::string(kSweepCsvHeader) + "\nnew-isotropic,2,3,4:4,1.25,1.5,0.25,PASS\n");
}

}  // namespace
}  // namespace hlineq
