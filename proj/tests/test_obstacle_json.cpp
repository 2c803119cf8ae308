#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace chartroute;

namespace {

ErrorCode load_error(const std::string& text)
{
    try {
        load_obstacle_document(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "document loaded: " << text;
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST(ObstacleDocument, LoadsTriangle)
{
    const auto doc = load_obstacle_document(
        R"({"extent": {"min": [109.35, 18.1], "max": [109.85, 18.4]},
            "polygons": [[[109.4, 18.2], [109.5, 18.2], [109.45, 18.3]]]})");
    EXPECT_EQ(doc.extent.min, (GeoPoint{109.35, 18.1}));
    ASSERT_EQ(doc.polygons.size(), 1u);
    EXPECT_EQ(doc.polygons[0].ring[2], (GeoPoint{109.45, 18.3}));
}

TEST(ObstacleDocument, InvariantViolations)
{
    EXPECT_EQ(load_error(R"({"extent": {"min": [0, 0], "max": [1, 1]}, "polygons": [[[0.1, 0.1], [0.2, 0.2]]]})"),
              ErrorCode::InvariantViolation);
    EXPECT_EQ(load_error(R"({"extent": {"min": [0, 0], "max": [1, 1]},
                             "polygons": [[[0.1, 0.1], [0.2, 0.2], [1.5, 0.5]]]})"),
              ErrorCode::InvariantViolation);
    EXPECT_EQ(load_error(R"({"extent": {"min": [1, 0], "max": [1, 1]}, "polygons": []})"),
              ErrorCode::InvariantViolation);
}

TEST(ObstacleDocument, SchemaErrors)
{
    EXPECT_EQ(load_error(R"({"polygons": []})"), ErrorCode::SchemaError);
    EXPECT_EQ(load_error(R"({"extent": {"min": [0, 0]}, "polygons": []})"), ErrorCode::SchemaError);
    EXPECT_EQ(load_error(R"({"extent": {"min": [0, "a"], "max": [1, 1]}, "polygons": []})"), ErrorCode::SchemaError);
    EXPECT_EQ(load_error(R"({"extent": {"min": [0, 0], "max": [1, 1]}, "polygons": {}})"), ErrorCode::SchemaError);
    EXPECT_EQ(load_error("not json"), ErrorCode::SchemaError);
}

// Property: emit then load is the identity on valid documents, including
// coordinates that need all 17 significant digits.
TEST(ObstacleDocument, EmitLoadRoundTrip)
{
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        ObstacleDocument doc;
        doc.extent = {{-10.0 + u(rng), 5.0 + u(rng)}, {20.0 + u(rng), 30.0 + u(rng)}};
        const int npoly = static_cast<int>(rng() % 4);
        for (int p = 0; p < npoly; ++p) {
            GeoPolygon poly;
            const int nv = 3 + static_cast<int>(rng() % 6);
            for (int v = 0; v < nv; ++v)
                poly.ring.push_back({doc.extent.min.lon + u(rng) * doc.extent.width(),
                                     doc.extent.min.lat + u(rng) * doc.extent.height()});
            doc.polygons.push_back(std::move(poly));
        }
        const auto text = emit_obstacle_document(doc);
        ASSERT_EQ(load_obstacle_document(text), doc);
        ASSERT_EQ(emit_obstacle_document(load_obstacle_document(text)), text);
    }
}
