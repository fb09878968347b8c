#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "satnet/sim/types.hpp"

namespace satnet::sim {

inline constexpr const char* kTraceHeader =
    "time,packet_id,sender,receiver,ip_src,port_src,ip_dst,port_dst,channel,frequency,size,"
    "packet_type,hop_index,outcome,snir,duration";

inline constexpr const char* kVectorHeader = "node,stat,time,value";

void write_trace_csv(std::ostream& os, const std::vector<TraceRecord>& trace);
void write_trace_csv(const std::string& path, const std::vector<TraceRecord>& trace);
std::string trace_csv_line(const TraceRecord& r);
TraceRecord parse_trace_line(const std::string& line);

// Strict reader: any malformed line is a DataError.
std::vector<TraceRecord> read_trace_csv(const std::string& path);

void write_vectors_csv(std::ostream& os, const std::vector<VectorSample>& samples);
void write_vectors_csv(const std::string& path, const std::vector<VectorSample>& samples);
std::vector<VectorSample> read_vectors_csv(const std::string& path);

}  // namespace satnet::sim
