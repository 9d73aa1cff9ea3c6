#pragma once

// Generated by make_golden from the reference coder. Do not edit.

#include <cstdint>
#include <vector>

namespace golden {

inline constexpr std::size_t kRepeated41PayloadLength = 114;

inline const std::vector<std::uint8_t> kRepeated41Payload = {
    0x41, 0x41, 0x41, 0x41, 0x40, 0xFE, 0x27, 0xD6, 0x96, 0x85, 0xF3, 0xCC, 0x90, 0xDA, 0x77, 0xA8,
    0xD2, 0x94, 0x39, 0xC0, 0xD8, 0x10, 0xEB, 0x94, 0xFF, 0x1B, 0x79, 0x3B, 0xFF, 0x80, 0x80, 0xB2,
    0x13, 0xB5, 0x18, 0x4C, 0x04, 0xC0, 0x05, 0x6A, 0x9F, 0x29, 0xA4, 0xFE, 0x2A, 0xD8, 0x95, 0xA6,
    0x8C, 0xC9, 0xAC, 0xDF, 0xF8, 0x0A, 0xD7, 0xEE, 0xD7, 0x80, 0x6B, 0x59, 0x0C, 0x91, 0x4E, 0xA9,
    0x87, 0x3B, 0xAF, 0xE0, 0x01, 0xD2, 0xCF, 0x3D, 0xFF, 0xDC, 0xAF, 0x0D, 0xC6, 0x21, 0xFA, 0x61,
    0xE3, 0x95, 0xB7, 0x2E, 0x25, 0x19, 0x5B, 0x75, 0x32, 0x31, 0xD0, 0x43, 0x45, 0xF2, 0x73, 0x7B,
    0x65, 0xD3, 0xCA, 0x97, 0x73, 0x66, 0x0C, 0x0B, 0x8C, 0xAD, 0x92, 0xC7, 0x5B, 0x1D, 0xD0, 0xE7,
    0x13, 0xA0};

inline const std::vector<std::vector<std::uint8_t>> kContainers = {
    // sparse_n2: 24 symbols, 22 payload bytes
    {
        0x4D, 0x41, 0x4D, 0x43, 0x01, 0x00, 0x30, 0x00, 0x00, 0x00, 0x20, 0x00, 0x00, 0x00, 0x0C, 0x02,
        0x10, 0x00, 0x02, 0x00, 0x00, 0x00, 0x03, 0x00, 0x00, 0x00, 0xEF, 0xCD, 0xAB, 0x89, 0x67, 0x45,
        0x23, 0x01, 0x18, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x16, 0x00, 0x00, 0x00, 0x00, 0x00,
        0x00, 0x00, 0x04, 0x00, 0x00, 0x82, 0xF0, 0xA6, 0xA0, 0xC6, 0x5E, 0x61, 0x5E, 0xDD, 0x97, 0x9B,
        0x64, 0x79, 0x1E, 0xBA, 0xFA, 0xB9, 0x24, 0xA8},
    // ramp_n12: 360 symbols, 368 payload bytes
    {
        0x4D, 0x41, 0x4D, 0x43, 0x01, 0x00, 0x50, 0x00, 0x00, 0x00, 0x28, 0x00, 0x00, 0x00, 0x10, 0x0C,
        0x10, 0x00, 0x03, 0x00, 0x00, 0x00, 0x05, 0x00, 0x00, 0x00, 0xEF, 0xCD, 0xAB, 0x89, 0x67, 0x45,
        0x23, 0x01, 0x68, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x70, 0x01, 0x00, 0x00, 0x00, 0x00,
        0x00, 0x00, 0x00, 0x00, 0x4D, 0x25, 0x12, 0xF8, 0x79, 0x41, 0x25, 0x2A, 0x3D, 0xB1, 0xF2, 0x3B,
        0xEC, 0xF2, 0x06, 0x8A, 0x5E, 0x70, 0x12, 0xEF, 0x13, 0xB3, 0x83, 0xB1, 0x61, 0x00, 0x4D, 0xBF,
        0x3D, 0xEB, 0xF2, 0xCD, 0xB7, 0xF6, 0x4C, 0xCB, 0xB4, 0x56, 0x2C, 0x05, 0x4E, 0x19, 0x26, 0x7F,
        0x6B, 0x23, 0xE0, 0x82, 0x22, 0xC8, 0xD1, 0x82, 0x20, 0x60, 0x33, 0x1D, 0x71, 0xCE, 0xAE, 0x43,
        0x5E, 0x74, 0x5F, 0x11, 0x9C, 0x40, 0xF8, 0x27, 0x28, 0xF2, 0xA6, 0x8E, 0x57, 0xFE, 0xD8, 0xC8,
        0x96, 0xC5, 0x28, 0x57, 0x46, 0x0D, 0xD6, 0xBF, 0x08, 0x1F, 0x71, 0x63, 0x29, 0x32, 0xFD, 0xB9,
        0x9B, 0x1A, 0x5C, 0x9F, 0xE3, 0x31, 0xBA, 0x94, 0xAB, 0x24, 0x08, 0xA2, 0xD5, 0x9A, 0xE9, 0x24,
        0x6F, 0x5F, 0x78, 0xAD, 0x20, 0x14, 0x1B, 0xC6, 0xBA, 0x88, 0x79, 0x8D, 0x1E, 0x11, 0xED, 0xBC,
        0x81, 0x2B, 0x27, 0x7F, 0x65, 0x2F, 0x6D, 0x99, 0x40, 0x44, 0x4C, 0x70, 0xE1, 0x21, 0x4A, 0x63,
        0x17, 0x6A, 0x1C, 0x07, 0xF9, 0xC8, 0x63, 0x26, 0xE8, 0x78, 0xFD, 0xBD, 0x06, 0xC2, 0x94, 0xAC,
        0xC6, 0x0F, 0xF7, 0x48, 0x93, 0x46, 0xB5, 0x38, 0x1F, 0xFC, 0x65, 0xDA, 0xCA, 0x89, 0x91, 0x95,
        0x1D, 0x2A, 0x3C, 0xC6, 0xE3, 0x05, 0x9C, 0xDE, 0x04, 0x03, 0xA8, 0x17, 0x37, 0x31, 0xC0, 0xF2,
        0xA3, 0x0E, 0x14, 0x7B, 0x91, 0xC9, 0x32, 0x80, 0x45, 0x62, 0x54, 0x3C, 0x33, 0x86, 0xBF, 0x48,
        0xC5, 0x38, 0x97, 0xD0, 0x23, 0x01, 0x5C, 0xE4, 0x3C, 0xAF, 0x7E, 0xE2, 0xDF, 0x9F, 0x55, 0xFA,
        0xE8, 0x90, 0x51, 0x73, 0x46, 0xCE, 0xEC, 0x10, 0x88, 0x7D, 0xF8, 0x09, 0xE9, 0xF9, 0xAA, 0x58,
        0x45, 0x19, 0x72, 0x00, 0x5C, 0x1E, 0x51, 0x25, 0xA7, 0xBA, 0xB8, 0x1E, 0x5C, 0x48, 0xF6, 0xD7,
        0xB3, 0x76, 0x3D, 0xCC, 0xC4, 0x13, 0xBF, 0xB2, 0x5C, 0x45, 0xFA, 0x68, 0x52, 0x92, 0x2E, 0xBB,
        0x1F, 0x32, 0x78, 0x3B, 0x27, 0x82, 0xAA, 0x99, 0x46, 0x38, 0x8B, 0x0B, 0xB7, 0x8A, 0x6E, 0x09,
        0x06, 0x1B, 0x45, 0x39, 0x70, 0xBC, 0xFC, 0xEC, 0x9A, 0x47, 0x8F, 0x1F, 0x7F, 0xF4, 0x2D, 0x4F,
        0x2F, 0xBB, 0x48, 0xF6, 0x97, 0x63, 0xB0, 0x88, 0xD9, 0x48, 0x93, 0x5B, 0x58, 0x89, 0xC5, 0x5A,
        0xCD, 0x76, 0xAF, 0x57, 0x60, 0x0E, 0x27, 0x28, 0xAC, 0x32, 0xE2, 0xBD, 0xB7, 0xD4, 0xA3, 0x79,
        0xF3, 0xE4, 0xC8, 0xA9, 0xF2, 0xBA, 0xCA, 0xE2, 0xFE, 0xB2, 0xC3, 0xED, 0x0C, 0x64, 0x9E, 0xE9,
        0x57, 0x07, 0xCD, 0xC9, 0x8D, 0xAF, 0x79, 0x8F, 0x9C, 0xD8, 0x57, 0xF6, 0xEA, 0xD8, 0xBD, 0xEF,
        0x00, 0xC0},
    // random_n16: 32 symbols, 33 payload bytes
    {
        0x4D, 0x41, 0x4D, 0x43, 0x01, 0x00, 0x0D, 0x00, 0x00, 0x00, 0x09, 0x00, 0x00, 0x00, 0x10, 0x10,
        0x10, 0x00, 0x01, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0xEF, 0xCD, 0xAB, 0x89, 0x67, 0x45,
        0x23, 0x01, 0x20, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x21, 0x00, 0x00, 0x00, 0x00, 0x00,
        0x00, 0x00, 0x0D, 0xD7, 0x8E, 0xC1, 0x72, 0x22, 0x05, 0x75, 0xAD, 0x99, 0xDE, 0xDD, 0x6E, 0x57,
        0x1C, 0xA6, 0x80, 0xB3, 0x45, 0xEA, 0xC3, 0xBE, 0x0A, 0x9B, 0xD7, 0x70, 0x3B, 0x12, 0xF3, 0x2D,
        0xBE, 0xC3, 0x90},
};

}  // namespace golden
