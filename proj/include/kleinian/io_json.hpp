#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "kleinian/gallery.hpp"

namespace kleinian {

using Json = nlohmann::ordered_json;

// Complex numbers serialize as [re, im]; matrices as row-major arrays of
// arrays; points and line duals as triples.
Json to_json(Cpx z);
Json to_json(const Vec3 &v);
Json to_json(const Mat3 &m);
Json to_json(const Mat2 &m);
Cpx cpx_from_json(const Json &j);
Mat3 mat3_from_json(const Json &j);
Mat2 mat2_from_json(const Json &j);

Json to_json(const ProjPoint &p);
Json to_json(const ProjLine &l);
Json to_json(const GenCircle &c);
GenCircle gencircle_from_json(const Json &j);

Json to_json(const LimitSetDesc &d);
Json to_json(const CyclicLimitSets &s);
Json to_json(const RegionDesc &r);
Json to_json(const InvariantLines &il);
Json to_json(const Classification &c);
Json to_json(const EigenData &e);
Json to_json(const RotationKind &r);
Json to_json(const SolMembership &m);
Json to_json(const ElementaryCertificate &c);
Json to_json(const SchottkyReport &r);

Json group_to_json(const GroupSpec &spec);
GroupSpec group_from_json(const Json &j);

Json pairing_to_json(const SchottkyPairing &p);
SchottkyPairing pairing_from_json(const Json &j);

// Fixed-format float printing so identical runs are byte-identical.
std::string format_double(double x);

// CSV cloud with columns (chart, re1, im1, re2, im2, word_length); each point
// is emitted in the affine chart of its largest coordinate.
std::string cloud_to_csv(const PointCloud &cloud);
// Moebius-side cloud: columns (re, im, word_length).
std::string mobius_cloud_to_csv(const std::vector<MobiusCloudPoint> &points);

std::string dump_json(const Json &j);

}  // namespace kleinian
