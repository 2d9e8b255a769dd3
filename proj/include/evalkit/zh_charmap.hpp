#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace evalkit::text::detail {

// Single-character traditional -> simplified mappings, sorted by key
// codepoint for binary search. Multi-character idiom conversion is out
// of scope.
inline constexpr std::array<std::pair<char32_t, char32_t>, 1680>
    kTraditionalToSimplified = {{
        {0x4E26, 0x5E76}, {0x4E7E, 0x5E72}, {0x4E82, 0x4E71}, {0x4E9E, 0x4E9A}, {0x4F75, 0x5E76}, {0x4F86, 0x6765},
        {0x4F96, 0x4ED1}, {0x4FC2, 0x7CFB}, {0x5000, 0x4F25}, {0x5009, 0x4ED3}, {0x500B, 0x4E2A}, {0x502B, 0x4F26},
        {0x5049, 0x4F1F}, {0x507D, 0x4F2A}, {0x5098, 0x4F1E}, {0x5099, 0x5907}, {0x50A2, 0x5BB6}, {0x50AD, 0x4F63},
        {0x50B3, 0x4F20}, {0x50B7, 0x4F24}, {0x50C2, 0x507B}, {0x50C5, 0x4EC5}, {0x50C9, 0x4F65}, {0x50D1, 0x4FA8},
        {0x50D5, 0x4EC6}, {0x50DE, 0x4F2A}, {0x50E5, 0x4FA5}, {0x50F9, 0x4EF7}, {0x5100, 0x4EEA}, {0x5102, 0x4FAC},
        {0x5104, 0x4EBF}, {0x5109, 0x4FED}, {0x5110, 0x50A7}, {0x5114, 0x4FE6}, {0x5118, 0x5C3D}, {0x511F, 0x507F},
        {0x512A, 0x4F18}, {0x5137, 0x4FEA}, {0x513A, 0x50A9}, {0x513C, 0x4FE8}, {0x5152, 0x513F}, {0x5169, 0x4E24},
        {0x51CD, 0x51BB}, {0x51F1, 0x51EF}, {0x5244, 0x522D}, {0x5247, 0x5219}, {0x524B, 0x514B}, {0x524E, 0x5239},
        {0x5275, 0x521B}, {0x5283, 0x5212}, {0x5287, 0x5267}, {0x5289, 0x5218}, {0x528A, 0x523D}, {0x528C, 0x523F},
        {0x528D, 0x5251}, {0x5291, 0x5242}, {0x52C1, 0x52B2}, {0x52D5, 0x52A8}, {0x52D9, 0x52A1}, {0x52DD, 0x80DC},
        {0x52DE, 0x52B3}, {0x52E2, 0x52BF}, {0x52F1, 0x52A2}, {0x52F3, 0x52CB}, {0x52F5, 0x52B1}, {0x52F8, 0x529D},
        {0x532F, 0x6C47}, {0x5340, 0x533A}, {0x5354, 0x534F}, {0x537B, 0x5374}, {0x53AD, 0x538C}, {0x53B2, 0x5389},
        {0x53C3, 0x53C2}, {0x53E2, 0x4E1B}, {0x554F, 0x95EE}, {0x5553, 0x542F}, {0x555E, 0x54D1}, {0x555F, 0x542F},
        {0x55AA, 0x4E27}, {0x55AC, 0x4E54}, {0x55AE, 0x5355}, {0x55C6, 0x545B}, {0x55C7, 0x556C}, {0x55CE, 0x5417},
        {0x55DA, 0x545C}, {0x55F6, 0x54D4}, {0x5606, 0x53F9}, {0x560D, 0x55BD}, {0x5614, 0x5455}, {0x5617, 0x5C1D},
        {0x5629, 0x54D7}, {0x562F, 0x5578}, {0x5630, 0x53FD}, {0x5641, 0x6076}, {0x5660, 0x54D2}, {0x5665, 0x54DD},
        {0x5672, 0x54D9}, {0x5678, 0x5428}, {0x5679, 0x5F53}, {0x5680, 0x549B}, {0x5687, 0x5413}, {0x56A5, 0x54BD},
        {0x56A8, 0x5499}, {0x56AE, 0x5411}, {0x56B4, 0x4E25}, {0x56C0, 0x556D}, {0x56C1, 0x55EB}, {0x56CC, 0x82CF},
        {0x56D1, 0x5631}, {0x5707, 0x56F5}, {0x570B, 0x56FD}, {0x570D, 0x56F4}, {0x5712, 0x56ED}, {0x5716, 0x56FE},
        {0x5718, 0x56E2}, {0x57F7, 0x6267}, {0x580A, 0x57A9}, {0x582F, 0x5C27}, {0x5831, 0x62A5}, {0x5834, 0x573A},
        {0x584A, 0x5757}, {0x584F, 0x57B2}, {0x5852, 0x57D8}, {0x5857, 0x6D82}, {0x5862, 0x575E}, {0x5864, 0x57D9},
        {0x5875, 0x5C18}, {0x5879, 0x5811}, {0x588A, 0x57AB}, {0x589C, 0x5760}, {0x58AE, 0x5815}, {0x58B3, 0x575F},
        {0x58BE, 0x57A6}, {0x58C7, 0x575B}, {0x58D3, 0x538B}, {0x58D8, 0x5792}, {0x58D9, 0x5739}, {0x58DA, 0x5786},
        {0x58DE, 0x574F}, {0x58DF, 0x5784}, {0x58E9, 0x575D}, {0x58EF, 0x58EE}, {0x58FA, 0x58F6}, {0x58FD, 0x5BFF},
        {0x5922, 0x68A6}, {0x5925, 0x4F19}, {0x593E, 0x5939}, {0x596A, 0x593A}, {0x596E, 0x594B}, {0x599D, 0x5986},
        {0x5A41, 0x5A04}, {0x5A66, 0x5987}, {0x5A6D, 0x5A05}, {0x5AAF, 0x59AB}, {0x5ABD, 0x5988}, {0x5AF5, 0x59A9},
        {0x5AFF, 0x5A73}, {0x5B08, 0x5A06}, {0x5B0B, 0x5A75}, {0x5B0C, 0x5A07}, {0x5B2A, 0x5AD4}, {0x5B38, 0x5A76},
        {0x5B6B, 0x5B59}, {0x5B78, 0x5B66}, {0x5BE2, 0x5BDD}, {0x5BE6, 0x5B9E}, {0x5BE7, 0x5B81}, {0x5BE9, 0x5BA1},
        {0x5BEB, 0x5199}, {0x5BEC, 0x5BBD}, {0x5BF6, 0x5B9D}, {0x5C07, 0x5C06}, {0x5C08, 0x4E13}, {0x5C0B, 0x5BFB},
        {0x5C0D, 0x5BF9}, {0x5C0E, 0x5BFC}, {0x5C37, 0x5C34}, {0x5C62, 0x5C61}, {0x5C64, 0x5C42}, {0x5C6C, 0x5C5E},
        {0x5CA1, 0x5188}, {0x5CFD, 0x5CE1}, {0x5D0D, 0x5D03}, {0x5D17, 0x5C97}, {0x5D22, 0x5CE5}, {0x5D84, 0x5D2D},
        {0x5D87, 0x5C96}, {0x5D97, 0x5D02}, {0x5DA0, 0x5CE4}, {0x5DB4, 0x5C99}, {0x5DB8, 0x5D58}, {0x5DBA, 0x5CAD},
        {0x5DBC, 0x5C7F}, {0x5DCB, 0x5CBF}, {0x5DD2, 0x5CE6}, {0x5DF0, 0x5DEF}, {0x5E25, 0x5E05}, {0x5E2B, 0x5E08},
        {0x5E33, 0x5E10}, {0x5E36, 0x5E26}, {0x5E40, 0x5E27}, {0x5E57, 0x5E3C}, {0x5E63, 0x5E01}, {0x5E6B, 0x5E2E},
        {0x5E79, 0x5E72}, {0x5E7E, 0x51E0}, {0x5EDF, 0x5E99}, {0x5EE0, 0x5382}, {0x5EE1, 0x5E91}, {0x5EE3, 0x5E7F},
        {0x5EEC, 0x5E90}, {0x5EF3, 0x5385}, {0x5F12, 0x5F11}, {0x5F35, 0x5F20}, {0x5F46, 0x522B}, {0x5F48, 0x5F39},
        {0x5F4C, 0x5F25}, {0x5F4E, 0x5F2F}, {0x5F59, 0x6C47}, {0x5F8C, 0x540E}, {0x5F9E, 0x4ECE}, {0x5FA0, 0x5F95},
        {0x5FA9, 0x590D}, {0x5FB5, 0x5F81}, {0x5FB9, 0x5F7B}, {0x60B5, 0x6005}, {0x60B6, 0x95F7}, {0x60E1, 0x6076},
        {0x60F1, 0x607C}, {0x611B, 0x7231}, {0x611C, 0x60EC}, {0x6134, 0x6006}, {0x6137, 0x607A}, {0x614B, 0x6001},
        {0x6158, 0x60E8}, {0x615A, 0x60ED}, {0x615F, 0x6078}, {0x616B, 0x6002}, {0x616E, 0x8651}, {0x6176, 0x5E86},
        {0x6182, 0x5FE7}, {0x6190, 0x601C}, {0x6191, 0x51ED}, {0x619A, 0x60EE}, {0x61AE, 0x6003}, {0x61B2, 0x5BAA},
        {0x61B6, 0x5FC6}, {0x61C7, 0x6073}, {0x61C9, 0x5E94}, {0x61DE, 0x8499}, {0x61DF, 0x603C}, {0x61E3, 0x61D1},
        {0x61F2, 0x60E9}, {0x61F7, 0x6000}, {0x61F8, 0x60AC}, {0x61FA, 0x5FCF}, {0x61FC, 0x60E7}, {0x61FE, 0x6151},
        {0x6200, 0x604B}, {0x6207, 0x6206}, {0x6214, 0x620B}, {0x6230, 0x6218}, {0x6232, 0x620F}, {0x633E, 0x631F},
        {0x6368, 0x820D}, {0x6372, 0x5377}, {0x6383, 0x626B}, {0x6384, 0x62A1}, {0x6399, 0x6323}, {0x63C0, 0x62E3},
        {0x63DA, 0x626C}, {0x6416, 0x6447}, {0x6436, 0x62A2}, {0x6451, 0x63B4}, {0x645F, 0x6402}, {0x646F, 0x631A},
        {0x6473, 0x62A0}, {0x6476, 0x629F}, {0x647A, 0x6298}, {0x647B, 0x63BA}, {0x6488, 0x635E}, {0x6493, 0x6320},
        {0x64A3, 0x63B8}, {0x64AB, 0x629A}, {0x64B2, 0x6251}, {0x64BB, 0x631E}, {0x64BE, 0x631D}, {0x64BF, 0x6361},
        {0x64C1, 0x62E5}, {0x64C4, 0x63B3}, {0x64CA, 0x51FB}, {0x64CB, 0x6321}, {0x64D4, 0x62C5}, {0x64DA, 0x636E},
        {0x64E0, 0x6324}, {0x64EC, 0x62DF}, {0x64EF, 0x6448}, {0x64F0, 0x62E7}, {0x64F2, 0x63B7}, {0x64F4, 0x6269},
        {0x64FE, 0x6270}, {0x6504, 0x6445}, {0x6514, 0x62E6}, {0x6519, 0x6400}, {0x651D, 0x6444}, {0x6523, 0x631B},
        {0x6524, 0x644A}, {0x6557, 0x8D25}, {0x6575, 0x654C}, {0x6578, 0x6570}, {0x6582, 0x655B}, {0x6583, 0x6BD9},
        {0x65AC, 0x65A9}, {0x65B7, 0x65AD}, {0x6642, 0x65F6}, {0x665D, 0x663C}, {0x6698, 0x65F8}, {0x66AB, 0x6682},
        {0x66C4, 0x6654}, {0x66C6, 0x5386}, {0x66C7, 0x6619}, {0x66C9, 0x6653}, {0x66E0, 0x65F7}, {0x66EC, 0x6652},
        {0x66F8, 0x4E66}, {0x6703, 0x4F1A}, {0x6727, 0x80E7}, {0x6771, 0x4E1C}, {0x689D, 0x6761}, {0x68C4, 0x5F03},
        {0x68D7, 0x67A3}, {0x68DF, 0x680B}, {0x68E7, 0x6808}, {0x694A, 0x6768}, {0x6953, 0x67AB}, {0x696D, 0x4E1A},
        {0x6975, 0x6781}, {0x69AE, 0x8363}, {0x69CB, 0x6784}, {0x69CD, 0x67AA}, {0x69F3, 0x6868}, {0x6A01, 0x6869},
        {0x6A02, 0x4E50}, {0x6A05, 0x679E}, {0x6A13, 0x697C}, {0x6A19, 0x6807}, {0x6A1E, 0x67A2}, {0x6A23, 0x6837},
        {0x6A38, 0x6734}, {0x6A39, 0x6811}, {0x6A3A, 0x6866}, {0x6A48, 0x6861}, {0x6A4B, 0x6865}, {0x6A5F, 0x673A},
        {0x6A62, 0x692D}, {0x6A89, 0x67FD}, {0x6A94, 0x6863}, {0x6A9C, 0x6867}, {0x6AA2, 0x68C0}, {0x6AA3, 0x6A2F},
        {0x6AAF, 0x53F0}, {0x6AB3, 0x69DF}, {0x6AB8, 0x67E0}, {0x6ABB, 0x69DB}, {0x6AC3, 0x67DC}, {0x6ADD, 0x691F},
        {0x6ADF, 0x680E}, {0x6AE8, 0x680C}, {0x6B04, 0x680F}, {0x6B0A, 0x6743}, {0x6B0F, 0x6924}, {0x6B12, 0x683E},
        {0x6B3D, 0x94A6}, {0x6B50, 0x6B27}, {0x6B5F, 0x6B24}, {0x6B61, 0x6B22}, {0x6B72, 0x5C81}, {0x6B77, 0x5386},
        {0x6B78, 0x5F52}, {0x6B98, 0x6B8B}, {0x6B9E, 0x6B92}, {0x6BA4, 0x6B87}, {0x6BAB, 0x6B9A}, {0x6BAE, 0x6B93},
        {0x6BAF, 0x6BA1}, {0x6BB2, 0x6B7C}, {0x6BBA, 0x6740}, {0x6BBC, 0x58F3}, {0x6BC6, 0x6BB4}, {0x6C08, 0x6BE1},
        {0x6C23, 0x6C14}, {0x6C2B, 0x6C22}, {0x6C2C, 0x6C29}, {0x6D79, 0x6D43}, {0x6D87, 0x6CFE}, {0x6DE8, 0x51C0},
        {0x6DEA, 0x6CA6}, {0x6DF5, 0x6E0A}, {0x6DF6, 0x6D9E}, {0x6DFA, 0x6D45}, {0x6E6F, 0x6C64}, {0x6E88, 0x6CA9},
        {0x6E96, 0x51C6}, {0x6E9D, 0x6C9F}, {0x6EC4, 0x6CA7}, {0x6EC5, 0x706D}, {0x6ECC, 0x6DA4}, {0x6ECE, 0x8365},
        {0x6EEC, 0x6CAA}, {0x6EEF, 0x6EDE}, {0x6EF2, 0x6E17}, {0x6EF7, 0x5364}, {0x6EFB, 0x6D50}, {0x6EFF, 0x6EE1},
        {0x6F1A, 0x6CA4}, {0x6F22, 0x6C49}, {0x6F32, 0x6DA8}, {0x6F38, 0x6E10}, {0x6F3F, 0x6D46}, {0x6F41, 0x988D},
        {0x6F54, 0x6D01}, {0x6F6F, 0x6D54}, {0x6F80, 0x6DA9}, {0x6F86, 0x6D47}, {0x6FAE, 0x6D4D}, {0x6FB1, 0x6DC0},
        {0x6FC1, 0x6D4A}, {0x6FC3, 0x6D53}, {0x6FD5, 0x6E7F}, {0x6FD8, 0x6CDE}, {0x6FDB, 0x8499}, {0x6FDF, 0x6D4E},
        {0x6FE4, 0x6D9B}, {0x6FEB, 0x6EE5}, {0x6FF1, 0x6EE8}, {0x6FFA, 0x6E85}, {0x6FFC, 0x6CFA}, {0x6FFE, 0x6EE4},
        {0x7006, 0x6E0E}, {0x7009, 0x6CFB}, {0x700B, 0x6C88}, {0x700F, 0x6D4F}, {0x7018, 0x6CF8}, {0x701F, 0x6F47},
        {0x7027, 0x6CF7}, {0x7030, 0x5F25}, {0x7043, 0x6CA3}, {0x7051, 0x6D12}, {0x7055, 0x6F13}, {0x7058, 0x6EE9},
        {0x7063, 0x6E7E}, {0x70BA, 0x4E3A}, {0x70CF, 0x4E4C}, {0x7121, 0x65E0}, {0x7149, 0x70BC}, {0x716C, 0x7080},
        {0x7192, 0x8367}, {0x71B1, 0x70ED}, {0x71B2, 0x988E}, {0x71C1, 0x70E8}, {0x71C8, 0x706F}, {0x71D2, 0x70E7},
        {0x71D9, 0x70EB}, {0x71DF, 0x8425}, {0x71E6, 0x707F}, {0x71ED, 0x70DB}, {0x71F4, 0x70E9}, {0x71FC, 0x70EC},
        {0x71FE, 0x7118}, {0x720D, 0x70C1}, {0x7210, 0x7089}, {0x721B, 0x70C2}, {0x7232, 0x4E3A}, {0x723A, 0x7237},
        {0x723E, 0x5C14}, {0x7246, 0x5899}, {0x7258, 0x724D}, {0x727D, 0x7275}, {0x7296, 0x8366}, {0x72A2, 0x728A},
        {0x72A7, 0x727A}, {0x72C0, 0x72B6}, {0x72F9, 0x72ED}, {0x7319, 0x72F0}, {0x7336, 0x72B9}, {0x733B, 0x72F2},
        {0x7345, 0x72EE}, {0x734E, 0x5956}, {0x7368, 0x72EC}, {0x736A, 0x72EF}, {0x736B, 0x7303}, {0x7370, 0x72DE},
        {0x7372, 0x83B7}, {0x7375, 0x730E}, {0x7377, 0x72B7}, {0x7378, 0x517D}, {0x737B, 0x732E}, {0x737C, 0x7315},
        {0x7380, 0x7321}, {0x73FE, 0x73B0}, {0x744B, 0x73AE}, {0x7464, 0x7476}, {0x7469, 0x83B9}, {0x746A, 0x739B},
        {0x74A3, 0x7391}, {0x74AB, 0x73F0}, {0x74B0, 0x73AF}, {0x74BD, 0x73BA}, {0x74CA, 0x743C}, {0x74CF, 0x73D1},
        {0x750C, 0x74EF}, {0x7522, 0x4EA7}, {0x755D, 0x4EA9}, {0x7562, 0x6BD5}, {0x756B, 0x753B}, {0x7576, 0x5F53},
        {0x7587, 0x7574}, {0x75D9, 0x75C9}, {0x760B, 0x75AF}, {0x760D, 0x75A1}, {0x7621, 0x75AE}, {0x7627, 0x759F},
        {0x763A, 0x7618}, {0x7642, 0x7597}, {0x7646, 0x75E8}, {0x7649, 0x7605}, {0x7658, 0x75A0}, {0x7662, 0x75D2},
        {0x7664, 0x7596}, {0x7665, 0x75C7}, {0x7670, 0x75C8}, {0x7671, 0x762B}, {0x767C, 0x53D1}, {0x76BA, 0x76B1},
        {0x76DC, 0x76D7}, {0x76DE, 0x76CF}, {0x76E1, 0x5C3D}, {0x76E3, 0x76D1}, {0x76E4, 0x76D8}, {0x76E7, 0x5362},
        {0x76EA, 0x8361}, {0x773E, 0x4F17}, {0x774F, 0x56F0}, {0x775C, 0x7741}, {0x779E, 0x7792}, {0x77AD, 0x4E86},
        {0x77BC, 0x7751}, {0x77C7, 0x8499}, {0x77DA, 0x77A9}, {0x77EF, 0x77EB}, {0x7843, 0x6731}, {0x7864, 0x7856},
        {0x786F, 0x781A}, {0x78BA, 0x786E}, {0x78BC, 0x7801}, {0x78DA, 0x7816}, {0x78EF, 0x77F6}, {0x790E, 0x7840},
        {0x7919, 0x788D}, {0x7926, 0x77FF}, {0x792A, 0x783A}, {0x792B, 0x783E}, {0x792C, 0x77FE}, {0x7931, 0x783B},
        {0x79A6, 0x5FA1}, {0x79AA, 0x7985}, {0x79AE, 0x793C}, {0x79B0, 0x7962}, {0x79B1, 0x7977}, {0x7A2E, 0x79CD},
        {0x7A31, 0x79F0}, {0x7A40, 0x8C37}, {0x7A4D, 0x79EF}, {0x7A4E, 0x9896}, {0x7A61, 0x7A51}, {0x7A62, 0x79FD},
        {0x7A69, 0x7A33}, {0x7A6B, 0x83B7}, {0x7AAA, 0x6D3C}, {0x7AAE, 0x7A77}, {0x7AAF, 0x7A91}, {0x7AC4, 0x7A9C},
        {0x7AC5, 0x7A8D}, {0x7AC7, 0x7AA6}, {0x7AC8, 0x7076}, {0x7ACA, 0x7A83}, {0x7ADD, 0x5E76}, {0x7AF6, 0x7ADE},
        {0x7B46, 0x7B14}, {0x7B8B, 0x7B3A}, {0x7B8F, 0x7B5D}, {0x7BC0, 0x8282}, {0x7BC4, 0x8303}, {0x7BC9, 0x7B51},
        {0x7BCB, 0x7BA7}, {0x7BE9, 0x7B5B}, {0x7BF3, 0x7B5A}, {0x7C0D, 0x7BD3}, {0x7C1E, 0x7BAA}, {0x7C2B, 0x7BAB},
        {0x7C3D, 0x7B7E}, {0x7C3E, 0x5E18}, {0x7C43, 0x7BEE}, {0x7C4C, 0x7B79}, {0x7C60, 0x7B3C}, {0x7C64, 0x7B7E},
        {0x7C69, 0x7B3E}, {0x7C6C, 0x7BF1}, {0x7C6E, 0x7BA9}, {0x7C72, 0x5401}, {0x7CDE, 0x7CAA}, {0x7CE7, 0x7CAE},
        {0x7CF0, 0x56E2}, {0x7CF2, 0x7C9D}, {0x7CF4, 0x7C74}, {0x7CF6, 0x7C9C}, {0x7CFE, 0x7EA0}, {0x7D00, 0x7EAA},
        {0x7D02, 0x7EA3}, {0x7D04, 0x7EA6}, {0x7D05, 0x7EA2}, {0x7D06, 0x7EA1}, {0x7D07, 0x7EA5}, {0x7D09, 0x7EAB},
        {0x7D0B, 0x7EB9}, {0x7D0D, 0x7EB3}, {0x7D10, 0x7EBD}, {0x7D13, 0x7EBE}, {0x7D14, 0x7EAF}, {0x7D15, 0x7EB0},
        {0x7D17, 0x7EB1}, {0x7D19, 0x7EB8}, {0x7D1B, 0x7EB7}, {0x7D1C, 0x7EAD}, {0x7D21, 0x7EBA}, {0x7D30, 0x7EC6},
        {0x7D31, 0x7EC2}, {0x7D32, 0x7EC1}, {0x7D33, 0x7EC5}, {0x7D39, 0x7ECD}, {0x7D3A, 0x7EC0}, {0x7D3C, 0x7ECB},
        {0x7D3F, 0x7ED0}, {0x7D40, 0x7ECC}, {0x7D42, 0x7EC8}, {0x7D44, 0x7EC4}, {0x7D46, 0x7ECA}, {0x7D4E, 0x7ED7},
        {0x7D50, 0x7ED3}, {0x7D55, 0x7EDD}, {0x7D5B, 0x7EE6}, {0x7D5D, 0x7ED4}, {0x7D5E, 0x7EDE}, {0x7D61, 0x7EDC},
        {0x7D62, 0x7EDA}, {0x7D66, 0x7ED9}, {0x7D68, 0x7ED2}, {0x7D71, 0x7EDF}, {0x7D73, 0x7EDB}, {0x7D79, 0x7EE2},
        {0x7D81, 0x7ED1}, {0x7D83, 0x7EE1}, {0x7D86, 0x7EE0}, {0x7D88, 0x7EE8}, {0x7D89, 0x7EE3}, {0x7D8C, 0x7EE4},
        {0x7D8F, 0x7EE5}, {0x7D93, 0x7ECF}, {0x7D9C, 0x7EFC}, {0x7DA0, 0x7EFF}, {0x7DA2, 0x7EF8}, {0x7DA3, 0x7EFB},
        {0x7DAB, 0x7EBF}, {0x7DAC, 0x7EF6}, {0x7DAD, 0x7EF4}, {0x7DB0, 0x7EFE}, {0x7DB1, 0x7EB2}, {0x7DB2, 0x7F51},
        {0x7DB4, 0x7F00}, {0x7DB8, 0x7EB6}, {0x7DB9, 0x7EFA}, {0x7DBA, 0x7EEE}, {0x7DBB, 0x7EFD}, {0x7DBD, 0x7EF0},
        {0x7DBE, 0x7EEB}, {0x7DBF, 0x7EF5}, {0x7DC4, 0x7EF2}, {0x7DC7, 0x7F01}, {0x7DCA, 0x7D27}, {0x7DCB, 0x7EEF},
        {0x7DD2, 0x7EEA}, {0x7DD7, 0x7F03}, {0x7DD8, 0x7F04}, {0x7DD9, 0x7F02}, {0x7DDA, 0x7EBF}, {0x7DDD, 0x7F09},
        {0x7DDE, 0x7F0E}, {0x7DE0, 0x7F14}, {0x7DE1, 0x7F17}, {0x7DE3, 0x7F18}, {0x7DE6, 0x7F0C}, {0x7DE8, 0x7F16},
        {0x7DE9, 0x7F13}, {0x7DEC, 0x7F05}, {0x7DEF, 0x7EAC}, {0x7DF1, 0x7F11}, {0x7DF4, 0x7EC3}, {0x7DFB, 0x81F4},
        {0x7E08, 0x8426}, {0x7E09, 0x7F19}, {0x7E0A, 0x7F22}, {0x7E0B, 0x7F12}, {0x7E10, 0x7EC9}, {0x7E11, 0x7F23},
        {0x7E1B, 0x7F1A}, {0x7E1D, 0x7F1C}, {0x7E1E, 0x7F1F}, {0x7E1F, 0x7F1B}, {0x7E23, 0x53BF}, {0x7E2B, 0x7F1D},
        {0x7E2D, 0x7F21}, {0x7E2E, 0x7F29}, {0x7E31, 0x7EB5}, {0x7E32, 0x7F27}, {0x7E34, 0x7EA4}, {0x7E35, 0x7F26},
        {0x7E36, 0x7D77}, {0x7E37, 0x7F15}, {0x7E39, 0x7F25}, {0x7E3D, 0x603B}, {0x7E3E, 0x7EE9}, {0x7E43, 0x7EF7},
        {0x7E45, 0x7F2B}, {0x7E46, 0x7F2A}, {0x7E52, 0x7F2F}, {0x7E54, 0x7EC7}, {0x7E55, 0x7F2E}, {0x7E5A, 0x7F2D},
        {0x7E5E, 0x7ED5}, {0x7E61, 0x7EE3}, {0x7E69, 0x7EF3}, {0x7E6A, 0x7ED8}, {0x7E6B, 0x7CFB}, {0x7E6D, 0x8327},
        {0x7E6E, 0x7F30}, {0x7E6F, 0x7F33}, {0x7E73, 0x7F34}, {0x7E79, 0x7ECE}, {0x7E7C, 0x7EE7}, {0x7E7D, 0x7F24},
        {0x7E7E, 0x7F31}, {0x7E88, 0x7F2C}, {0x7E8C, 0x7EED}, {0x7E8D, 0x7D2F}, {0x7E8F, 0x7F20}, {0x7E93, 0x7F28},
        {0x7E94, 0x624D}, {0x7E96, 0x7EA4}, {0x7E9C, 0x7F06}, {0x7F3D, 0x94B5}, {0x7F48, 0x575B}, {0x7F75, 0x9A82},
        {0x7F77, 0x7F62}, {0x7F85, 0x7F57}, {0x7FA9, 0x4E49}, {0x7FD2, 0x4E60}, {0x7FF9, 0x7FD8}, {0x802C, 0x8027},
        {0x8056, 0x5723}, {0x805E, 0x95FB}, {0x806F, 0x8054}, {0x8070, 0x806A}, {0x8072, 0x58F0}, {0x8073, 0x8038},
        {0x8076, 0x8042}, {0x8079, 0x804D}, {0x807D, 0x542C}, {0x807E, 0x804B}, {0x8085, 0x8083}, {0x8105, 0x80C1},
        {0x811B, 0x80EB}, {0x8139, 0x80C0}, {0x814E, 0x80BE}, {0x8166, 0x8111}, {0x816B, 0x80BF}, {0x8173, 0x811A},
        {0x8178, 0x80A0}, {0x8195, 0x8158}, {0x819A, 0x80A4}, {0x81A0, 0x80F6}, {0x81BD, 0x80C6}, {0x81BE, 0x810D},
        {0x81BF, 0x8113}, {0x81C9, 0x8138}, {0x81CD, 0x8110}, {0x81CF, 0x8191}, {0x81D8, 0x814A}, {0x81DA, 0x80EA},
        {0x81DF, 0x810F}, {0x81E0, 0x8114}, {0x81E8, 0x4E34}, {0x81FA, 0x53F0}, {0x8207, 0x4E0E}, {0x8208, 0x5174},
        {0x8209, 0x4E3E}, {0x820A, 0x65E7}, {0x8259, 0x8231}, {0x8264, 0x8223}, {0x8266, 0x8230}, {0x8271, 0x8270},
        {0x8277, 0x8273}, {0x82BB, 0x520D}, {0x838A, 0x5E84}, {0x8396, 0x830E}, {0x83EF, 0x534E}, {0x8407, 0x82CC},
        {0x840A, 0x83B1}, {0x842C, 0x4E07}, {0x8449, 0x53F6}, {0x8494, 0x83B3}, {0x84BC, 0x82CD}, {0x84C0, 0x836A},
        {0x84CB, 0x76D6}, {0x84EF, 0x82C1}, {0x84FD, 0x835C}, {0x8514, 0x535C}, {0x851E, 0x848C}, {0x8523, 0x848B},
        {0x8541, 0x8368}, {0x854E, 0x835E}, {0x8552, 0x836C}, {0x8553, 0x82B8}, {0x8569, 0x8361}, {0x856A, 0x829C},
        {0x856D, 0x8427}, {0x8588, 0x835F}, {0x858C, 0x8297}, {0x8591, 0x59DC}, {0x8594, 0x8537}, {0x85A6, 0x8350},
        {0x85A9, 0x8428}, {0x85BA, 0x8360}, {0x85C9, 0x501F}, {0x85CD, 0x84DD}, {0x85CE, 0x8369}, {0x85DD, 0x827A},
        {0x85E5, 0x836F}, {0x8606, 0x82A6}, {0x8607, 0x82CF}, {0x860B, 0x82F9}, {0x8622, 0x830F}, {0x862D, 0x5170},
        {0x863F, 0x841D}, {0x8655, 0x5904}, {0x865C, 0x864F}, {0x865F, 0x53F7}, {0x8667, 0x4E8F}, {0x86FA, 0x86F1},
        {0x8755, 0x8680}, {0x8766, 0x867E}, {0x8784, 0x86F3}, {0x879E, 0x8682}, {0x87A2, 0x8424}, {0x87BB, 0x877C},
        {0x87C4, 0x86F0}, {0x87C8, 0x8748}, {0x87CE, 0x87A8}, {0x87EC, 0x8749}, {0x87EF, 0x86F2}, {0x87F2, 0x866B},
        {0x87F6, 0x86CF}, {0x87FB, 0x8681}, {0x8806, 0x867F}, {0x8810, 0x86F4}, {0x8811, 0x877E}, {0x881F, 0x8721},
        {0x8823, 0x86CE}, {0x8831, 0x86CA}, {0x8836, 0x8695}, {0x883B, 0x86EE}, {0x8846, 0x4F17}, {0x884A, 0x8511},
        {0x8853, 0x672F}, {0x885B, 0x536B}, {0x885D, 0x51B2}, {0x88CF, 0x91CC}, {0x88DC, 0x8865}, {0x88DD, 0x88C5},
        {0x88E1, 0x91CC}, {0x88FD, 0x5236}, {0x8907, 0x590D}, {0x8938, 0x891B}, {0x893B, 0x4EB5}, {0x8956, 0x8884},
        {0x8960, 0x88C6}, {0x8964, 0x8934}, {0x896A, 0x889C}, {0x896F, 0x886C}, {0x8972, 0x88AD}, {0x898B, 0x89C1},
        {0x898F, 0x89C4}, {0x8993, 0x89C5}, {0x8996, 0x89C6}, {0x89A1, 0x89CB}, {0x89A6, 0x89CE}, {0x89AA, 0x4EB2},
        {0x89AC, 0x89CA}, {0x89B2, 0x89D0}, {0x89B7, 0x89D1}, {0x89BA, 0x89C9}, {0x89BD, 0x89C8}, {0x89BF, 0x89CC},
        {0x89C0, 0x89C2}, {0x89F4, 0x89DE}, {0x89F8, 0x89E6}, {0x8A02, 0x8BA2}, {0x8A03, 0x8BA3}, {0x8A08, 0x8BA1},
        {0x8A0A, 0x8BAF}, {0x8A0C, 0x8BA7}, {0x8A0E, 0x8BA8}, {0x8A13, 0x8BAD}, {0x8A15, 0x8BAA}, {0x8A16, 0x8BAB},
        {0x8A18, 0x8BB0}, {0x8A1B, 0x8BB9}, {0x8A1D, 0x8BB6}, {0x8A1F, 0x8BBC}, {0x8A23, 0x8BC0}, {0x8A25, 0x8BB7},
        {0x8A2A, 0x8BBF}, {0x8A2D, 0x8BBE}, {0x8A31, 0x8BB8}, {0x8A34, 0x8BC9}, {0x8A36, 0x8BC3}, {0x8A3A, 0x8BCA},
        {0x8A41, 0x8BC2}, {0x8A46, 0x8BCB}, {0x8A4E, 0x8BB5}, {0x8A50, 0x8BC8}, {0x8A52, 0x8BD2}, {0x8A54, 0x8BCF},
        {0x8A55, 0x8BC4}, {0x8A58, 0x8BCE}, {0x8A5B, 0x8BC5}, {0x8A5E, 0x8BCD}, {0x8A61, 0x8BE9}, {0x8A62, 0x8BE2},
        {0x8A63, 0x8BE3}, {0x8A66, 0x8BD5}, {0x8A69, 0x8BD7}, {0x8A6B, 0x8BE7}, {0x8A6C, 0x8BDF}, {0x8A6D, 0x8BE1},
        {0x8A6E, 0x8BE0}, {0x8A70, 0x8BD8}, {0x8A71, 0x8BDD}, {0x8A72, 0x8BE5}, {0x8A73, 0x8BE6}, {0x8A75, 0x8BDC},
        {0x8A7C, 0x8BD9}, {0x8A7F, 0x8BD6}, {0x8A84, 0x8BD4}, {0x8A85, 0x8BDB}, {0x8A86, 0x8BD3}, {0x8A87, 0x5938},
        {0x8A8D, 0x8BA4}, {0x8A91, 0x8BF3}, {0x8A92, 0x8BF6}, {0x8A95, 0x8BDE}, {0x8A98, 0x8BF1}, {0x8A9A, 0x8BEE},
        {0x8A9E, 0x8BED}, {0x8AA0, 0x8BDA}, {0x8AA1, 0x8BEB}, {0x8AA3, 0x8BEC}, {0x8AA4, 0x8BEF}, {0x8AA5, 0x8BF0},
        {0x8AA6, 0x8BF5}, {0x8AA8, 0x8BF2}, {0x8AAA, 0x8BF4}, {0x8AB0, 0x8C01}, {0x8AB2, 0x8BFE}, {0x8AB6, 0x8C07},
        {0x8AB9, 0x8BFD}, {0x8ABC, 0x8C0A}, {0x8ABE, 0x8A1A}, {0x8ABF, 0x8C03}, {0x8AC2, 0x8C04}, {0x8AC4, 0x8C06},
        {0x8AC7, 0x8C08}, {0x8AC9, 0x8BFF}, {0x8ACB, 0x8BF7}, {0x8ACD, 0x8BE4}, {0x8ACF, 0x8BF9}, {0x8AD1, 0x8BFC},
        {0x8AD2, 0x8C05}, {0x8AD6, 0x8BBA}, {0x8AD7, 0x8C02}, {0x8ADB, 0x8C00}, {0x8ADC, 0x8C0D}, {0x8AE2, 0x8BE8},
        {0x8AE4, 0x8C14}, {0x8AE6, 0x8C1B}, {0x8AE7, 0x8C10}, {0x8AEB, 0x8C0F}, {0x8AED, 0x8C15}, {0x8AEE, 0x8C18},
        {0x8AF1, 0x8BB3}, {0x8AF3, 0x8C19}, {0x8AF6, 0x8C0C}, {0x8AF7, 0x8BBD}, {0x8AF8, 0x8BF8}, {0x8AFA, 0x8C1A},
        {0x8AFC, 0x8C16}, {0x8AFE, 0x8BFA}, {0x8B00, 0x8C0B}, {0x8B01, 0x8C12}, {0x8B02, 0x8C13}, {0x8B04, 0x8A8A},
        {0x8B05, 0x8BCC}, {0x8B0A, 0x8C0E}, {0x8B0E, 0x8C1C}, {0x8B10, 0x8C27}, {0x8B14, 0x8C11}, {0x8B16, 0x8C21},
        {0x8B17, 0x8C24}, {0x8B19, 0x8C26}, {0x8B1A, 0x8C25}, {0x8B1B, 0x8BB2}, {0x8B1D, 0x8C22}, {0x8B20, 0x8C23},
        {0x8B28, 0x8C1F}, {0x8B2B, 0x8C2A}, {0x8B2C, 0x8C2C}, {0x8B33, 0x8BB4}, {0x8B39, 0x8C28}, {0x8B3E, 0x8C29},
        {0x8B41, 0x54D7}, {0x8B49, 0x8BC1}, {0x8B4E, 0x8C32}, {0x8B4F, 0x8BA5}, {0x8B56, 0x8C2E}, {0x8B58, 0x8BC6},
        {0x8B59, 0x8C2F}, {0x8B5A, 0x8C2D}, {0x8B5C, 0x8C31}, {0x8B6B, 0x8C35}, {0x8B6F, 0x8BD1}, {0x8B70, 0x8BAE},
        {0x8B74, 0x8C34}, {0x8B77, 0x62A4}, {0x8B7D, 0x8A89}, {0x8B80, 0x8BFB}, {0x8B8A, 0x53D8}, {0x8B92, 0x8C17},
        {0x8B93, 0x8BA9}, {0x8B95, 0x8C30}, {0x8B96, 0x8C36}, {0x8B9A, 0x8D5E}, {0x8B9C, 0x8C20}, {0x8C48, 0x5C82},
        {0x8C4E, 0x7AD6}, {0x8C50, 0x4E30}, {0x8C9D, 0x8D1D}, {0x8C9E, 0x8D1E}, {0x8CA0, 0x8D1F}, {0x8CA1, 0x8D22},
        {0x8CA2, 0x8D21}, {0x8CA7, 0x8D2B}, {0x8CA8, 0x8D27}, {0x8CA9, 0x8D29}, {0x8CAA, 0x8D2A}, {0x8CAB, 0x8D2F},
        {0x8CAC, 0x8D23}, {0x8CAF, 0x8D2E}, {0x8CB2, 0x8D40}, {0x8CB3, 0x8D30}, {0x8CB4, 0x8D35}, {0x8CB6, 0x8D2C},
        {0x8CB7, 0x4E70}, {0x8CB8, 0x8D37}, {0x8CBB, 0x8D39}, {0x8CBD, 0x8D3B}, {0x8CBF, 0x8D38}, {0x8CC0, 0x8D3A},
        {0x8CC1, 0x8D32}, {0x8CC2, 0x8D42}, {0x8CC3, 0x8D41}, {0x8CC4, 0x8D3F}, {0x8CC5, 0x8D45}, {0x8CC7, 0x8D44},
        {0x8CC8, 0x8D3E}, {0x8CCA, 0x8D3C}, {0x8CD1, 0x8D48}, {0x8CD2, 0x8D4A}, {0x8CD3, 0x5BBE}, {0x8CDA, 0x8D49},
        {0x8CDC, 0x8D50}, {0x8CDE, 0x8D4F}, {0x8CE0, 0x8D54}, {0x8CE2, 0x8D24}, {0x8CE3, 0x5356}, {0x8CE4, 0x8D31},
        {0x8CE6, 0x8D4B}, {0x8CE7, 0x8D55}, {0x8CEA, 0x8D28}, {0x8CEC, 0x8D26}, {0x8CED, 0x8D4C}, {0x8CF4, 0x8D56},
        {0x8CFA, 0x8D5A}, {0x8CFB, 0x8D59}, {0x8CFC, 0x8D2D}, {0x8CFD, 0x8D5B}, {0x8D04, 0x8D3D}, {0x8D05, 0x8D58},
        {0x8D08, 0x8D60}, {0x8D0D, 0x8D61}, {0x8D0F, 0x8D62}, {0x8D10, 0x8D46}, {0x8D13, 0x8D43}, {0x8D16, 0x8D4E},
        {0x8D17, 0x8D5D}, {0x8D95, 0x8D76}, {0x8D99, 0x8D75}, {0x8DA8, 0x8D8B}, {0x8E10, 0x8DF5}, {0x8E34, 0x8E0A},
        {0x8E4C, 0x8DC4}, {0x8E55, 0x8DF8}, {0x8E63, 0x8E52}, {0x8E7A, 0x8DF7}, {0x8E8A, 0x8E0C}, {0x8E8B, 0x8DFB},
        {0x8E8D, 0x8DC3}, {0x8E91, 0x8E2F}, {0x8E92, 0x8DDE}, {0x8E93, 0x8E2C}, {0x8EA1, 0x8E51}, {0x8EC0, 0x8EAF},
        {0x8ECA, 0x8F66}, {0x8ECB, 0x8F67}, {0x8ECC, 0x8F68}, {0x8ECD, 0x519B}, {0x8ED2, 0x8F69}, {0x8EDB, 0x8F6D},
        {0x8EDF, 0x8F6F}, {0x8EEB, 0x8F78}, {0x8EF8, 0x8F74}, {0x8EFB, 0x8F72}, {0x8EFC, 0x8F76}, {0x8F03, 0x8F83},
        {0x8F09, 0x8F7D}, {0x8F14, 0x8F85}, {0x8F15, 0x8F7B}, {0x8F1B, 0x8F86}, {0x8F1C, 0x8F8E}, {0x8F1D, 0x8F89},
        {0x8F1F, 0x8F8D}, {0x8F25, 0x8F8A}, {0x8F26, 0x8F87}, {0x8F29, 0x8F88}, {0x8F2A, 0x8F6E}, {0x8F2F, 0x8F91},
        {0x8F33, 0x8F8F}, {0x8F38, 0x8F93}, {0x8F3B, 0x8F90}, {0x8F3E, 0x8F97}, {0x8F3F, 0x8206}, {0x8F42, 0x6BC2},
        {0x8F44, 0x8F96}, {0x8F45, 0x8F95}, {0x8F46, 0x8F98}, {0x8F49, 0x8F6C}, {0x8F4D, 0x8F99}, {0x8F4E, 0x8F7F},
        {0x8F54, 0x8F9A}, {0x8F5F, 0x8F70}, {0x8F61, 0x8F94}, {0x8F64, 0x8F73}, {0x8FA6, 0x529E}, {0x8FAD, 0x8F9E},
        {0x8FAF, 0x8FA9}, {0x8FB2, 0x519C}, {0x8FF4, 0x56DE}, {0x9015, 0x8FF3}, {0x9019, 0x8FD9}, {0x9032, 0x8FDB},
        {0x904B, 0x8FD0}, {0x904E, 0x8FC7}, {0x9054, 0x8FBE}, {0x9055, 0x8FDD}, {0x9059, 0x9065}, {0x905C, 0x900A},
        {0x905E, 0x9012}, {0x9060, 0x8FDC}, {0x9069, 0x9002}, {0x9072, 0x8FDF}, {0x9077, 0x8FC1}, {0x9078, 0x9009},
        {0x907C, 0x8FBD}, {0x9081, 0x8FC8}, {0x9084, 0x8FD8}, {0x9087, 0x8FE9}, {0x908A, 0x8FB9}, {0x908F, 0x903B},
        {0x90F5, 0x90AE}, {0x9109, 0x4E61}, {0x9112, 0x90B9}, {0x9114, 0x90AC}, {0x9127, 0x9093}, {0x912D, 0x90D1},
        {0x9130, 0x90BB}, {0x9132, 0x90F8}, {0x9134, 0x90BA}, {0x913A, 0x909D}, {0x9148, 0x90E6}, {0x919C, 0x4E11},
        {0x919E, 0x915D}, {0x91AB, 0x533B}, {0x91AC, 0x9171}, {0x91C0, 0x917F}, {0x91C1, 0x8845}, {0x91C5, 0x917D},
        {0x91CB, 0x91CA}, {0x91D7, 0x948A}, {0x91D8, 0x9489}, {0x91DD, 0x9488}, {0x91E3, 0x9493}, {0x91E7, 0x948F},
        {0x91E9, 0x9492}, {0x91F5, 0x9497}, {0x91F7, 0x948D}, {0x9209, 0x94A0}, {0x920D, 0x949D}, {0x920E, 0x94A9},
        {0x9210, 0x94A4}, {0x9214, 0x949E}, {0x9215, 0x94AE}, {0x921E, 0x94A7}, {0x9223, 0x9499}, {0x9226, 0x949B},
        {0x9234, 0x94C3}, {0x9237, 0x94B4}, {0x923A, 0x94B0}, {0x923E, 0x94C0}, {0x923F, 0x94BF}, {0x9240, 0x94BE},
        {0x9245, 0x949C}, {0x9251, 0x94C2}, {0x9257, 0x94B3}, {0x925A, 0x94C6}, {0x925B, 0x94C5}, {0x9262, 0x94B5},
        {0x9264, 0x94A9}, {0x926C, 0x94BC}, {0x9278, 0x94F0}, {0x927A, 0x94D2}, {0x927B, 0x94EC}, {0x9280, 0x94F6},
        {0x9283, 0x94F3}, {0x9285, 0x94DC}, {0x9291, 0x94E3}, {0x9293, 0x94E8}, {0x9296, 0x94E2}, {0x9298, 0x94ED},
        {0x929C, 0x8854}, {0x92A5, 0x94F1}, {0x92A8, 0x94F5}, {0x92AC, 0x94D0}, {0x92B3, 0x9510}, {0x92B7, 0x9500},
        {0x92B9, 0x9508}, {0x92BC, 0x9509}, {0x92C1, 0x94DD}, {0x92C5, 0x950C}, {0x92C7, 0x94A1}, {0x92CC, 0x94E4},
        {0x92CF, 0x94D7}, {0x92D2, 0x950B}, {0x92E4, 0x9504}, {0x92EA, 0x94FA}, {0x92ED, 0x9510}, {0x92F0, 0x9502},
        {0x92F8, 0x952F}, {0x92FC, 0x94A2}, {0x9304, 0x5F55}, {0x9310, 0x9525}, {0x9318, 0x9524}, {0x931A, 0x94EE},
        {0x9320, 0x952D}, {0x9322, 0x94B1}, {0x9326, 0x9526}, {0x9328, 0x951A}, {0x932B, 0x9521}, {0x932F, 0x9519},
        {0x9333, 0x9530}, {0x9336, 0x8868}, {0x934B, 0x9505}, {0x934D, 0x9540}, {0x9358, 0x94E1}, {0x935B, 0x953B},
        {0x9375, 0x952E}, {0x9376, 0x9536}, {0x937A, 0x9517}, {0x937E, 0x949F}, {0x9382, 0x9541}, {0x938A, 0x9551},
        {0x9396, 0x9501}, {0x9398, 0x9549}, {0x93A2, 0x94A8}, {0x93A3, 0x84E5}, {0x93A7, 0x94E0}, {0x93A9, 0x94E9},
        {0x93AC, 0x9550}, {0x93AE, 0x9547}, {0x93B3, 0x954D}, {0x93BF, 0x954E}, {0x93C7, 0x65CB}, {0x93C8, 0x94FE},
        {0x93D1, 0x955D}, {0x93D7, 0x94FF}, {0x93D8, 0x9535}, {0x93DF, 0x94F2}, {0x93E1, 0x955C}, {0x93E2, 0x9556},
        {0x93E4, 0x9542}, {0x93F5, 0x94E7}, {0x93FD, 0x9508}, {0x9403, 0x94D9}, {0x940B, 0x94F4}, {0x9410, 0x9563},
        {0x9412, 0x94F9}, {0x9418, 0x949F}, {0x9426, 0x950E}, {0x942E, 0x9570}, {0x9433, 0x956D}, {0x9435, 0x94C1},
        {0x943A, 0x94DB}, {0x943F, 0x9571}, {0x9444, 0x94F8}, {0x944C, 0x9554}, {0x9451, 0x9274}, {0x9452, 0x9274},
        {0x9460, 0x94C4}, {0x946D, 0x9567}, {0x9470, 0x94A5}, {0x9477, 0x954A}, {0x947C, 0x9523}, {0x947D, 0x94BB},
        {0x947E, 0x92AE}, {0x947F, 0x51FF}, {0x9577, 0x957F}, {0x9580, 0x95E8}, {0x9582, 0x95E9}, {0x9583, 0x95EA},
        {0x9589, 0x95ED}, {0x958B, 0x5F00}, {0x958F, 0x95F0}, {0x9591, 0x95F2}, {0x9592, 0x95F2}, {0x9593, 0x95F4},
        {0x9594, 0x95F5}, {0x9598, 0x95F8}, {0x95A1, 0x9602}, {0x95A3, 0x9601}, {0x95A5, 0x9600}, {0x95A8, 0x95FA},
        {0x95A9, 0x95FD}, {0x95AB, 0x9603}, {0x95AC, 0x9606}, {0x95AD, 0x95FE}, {0x95B1, 0x9605}, {0x95B6, 0x960A},
        {0x95B9, 0x9609}, {0x95BB, 0x960E}, {0x95BE, 0x9608}, {0x95C3, 0x9612}, {0x95C6, 0x677F}, {0x95C8, 0x95F1},
        {0x95CA, 0x9614}, {0x95CB, 0x9615}, {0x95CC, 0x9611}, {0x95D0, 0x9617}, {0x95D4, 0x9616}, {0x95D5, 0x9619},
        {0x95D6, 0x95EF}, {0x95DC, 0x5173}, {0x95E1, 0x9610}, {0x95E2, 0x8F9F}, {0x95E5, 0x95FC}, {0x965D, 0x9655},
        {0x9670, 0x9634}, {0x9673, 0x9648}, {0x9678, 0x9646}, {0x967D, 0x9633}, {0x968A, 0x961F}, {0x968E, 0x9636},
        {0x9695, 0x9668}, {0x969B, 0x9645}, {0x96A8, 0x968F}, {0x96AA, 0x9669}, {0x96B1, 0x9690}, {0x96B4, 0x9647},
        {0x96B8, 0x96B6}, {0x96BB, 0x53EA}, {0x96D6, 0x867D}, {0x96D9, 0x53CC}, {0x96DB, 0x96CF}, {0x96DC, 0x6742},
        {0x96DE, 0x9E21}, {0x96E2, 0x79BB}, {0x96E3, 0x96BE}, {0x96F2, 0x4E91}, {0x96FB, 0x7535}, {0x9727, 0x96FE},
        {0x973D, 0x9701}, {0x9748, 0x7075}, {0x975C, 0x9759}, {0x9768, 0x9765}, {0x978F, 0x5DE9}, {0x97A6, 0x79CB},
        {0x97C3, 0x9791}, {0x97C6, 0x5343}, {0x97CB, 0x97E6}, {0x97CC, 0x97E7}, {0x97D3, 0x97E9}, {0x97D9, 0x97EA},
        {0x97DC, 0x97EC}, {0x97DE, 0x97EB}, {0x97FF, 0x54CD}, {0x9801, 0x9875}, {0x9802, 0x9876}, {0x9803, 0x9877},
        {0x9805, 0x9879}, {0x9806, 0x987A}, {0x9808, 0x987B}, {0x980A, 0x987C}, {0x980C, 0x9882}, {0x980E, 0x9880},
        {0x9810, 0x9884}, {0x9811, 0x987D}, {0x9812, 0x9881}, {0x9813, 0x987F}, {0x9817, 0x9887}, {0x9818, 0x9886},
        {0x9824, 0x9890}, {0x9826, 0x988F}, {0x982D, 0x5934}, {0x9830, 0x988A}, {0x9837, 0x9894}, {0x9838, 0x9888},
        {0x9839, 0x9893}, {0x983B, 0x9891}, {0x9846, 0x9897}, {0x984C, 0x9898}, {0x984D, 0x989D}, {0x984E, 0x989A},
        {0x984F, 0x989C}, {0x9853, 0x989B}, {0x9858, 0x613F}, {0x985B, 0x98A0}, {0x985E, 0x7C7B}, {0x9865, 0x98A2},
        {0x9867, 0x987E}, {0x986B, 0x98A4}, {0x986F, 0x663E}, {0x9870, 0x98A6}, {0x9871, 0x9885}, {0x9873, 0x989E},
        {0x9874, 0x98A7}, {0x98A8, 0x98CE}, {0x98AF, 0x98D2}, {0x98B1, 0x53F0}, {0x98B3, 0x522E}, {0x98B6, 0x98D3},
        {0x98BA, 0x98CF}, {0x98BC, 0x98D5}, {0x98C4, 0x98D8}, {0x98C6, 0x98D9}, {0x98DB, 0x98DE}, {0x98E2, 0x9965},
        {0x98E9, 0x9968}, {0x98EF, 0x996D}, {0x98F2, 0x996E}, {0x98F4, 0x9974}, {0x98FC, 0x9972}, {0x98FD, 0x9971},
        {0x98FE, 0x9970}, {0x9903, 0x997A}, {0x9905, 0x997C}, {0x9909, 0x9977}, {0x990A, 0x517B}, {0x990C, 0x9975},
        {0x9911, 0x997D}, {0x9912, 0x9981}, {0x9913, 0x997F}, {0x9918, 0x4F59}, {0x991B, 0x9984}, {0x991E, 0x996F},
        {0x9921, 0x9985}, {0x9928, 0x9986}, {0x9933, 0x9967}, {0x993C, 0x9969}, {0x993E, 0x998F}, {0x993F, 0x998A},
        {0x9943, 0x998D}, {0x9945, 0x9992}, {0x9948, 0x9990}, {0x9949, 0x9991}, {0x994A, 0x9993}, {0x994B, 0x9988},
        {0x994C, 0x9994}, {0x9951, 0x9965}, {0x9952, 0x9976}, {0x9957, 0x98E8}, {0x995C, 0x990D}, {0x995E, 0x998B},
        {0x99AC, 0x9A6C}, {0x99AD, 0x9A6D}, {0x99B1, 0x9A6E}, {0x99B3, 0x9A70}, {0x99B4, 0x9A6F}, {0x99C1, 0x9A73},
        {0x99D0, 0x9A7B}, {0x99D1, 0x9A7D}, {0x99D2, 0x9A79}, {0x99D5, 0x9A7E}, {0x99D9, 0x9A78}, {0x99DB, 0x9A76},
        {0x99DD, 0x9A7C}, {0x99DF, 0x9A77}, {0x99ED, 0x9A87}, {0x99F1, 0x9A7C}, {0x9A01, 0x9A8B}, {0x9A05, 0x9A93},
        {0x9A0E, 0x9A91}, {0x9A0F, 0x9A90}, {0x9A30, 0x817E}, {0x9A37, 0x9A9A}, {0x9A3E, 0x9AA1}, {0x9A40, 0x84E6},
        {0x9A41, 0x9A9C}, {0x9A42, 0x9A96}, {0x9A43, 0x9AA0}, {0x9A44, 0x9AA2}, {0x9A45, 0x9A71}, {0x9A4A, 0x9A85},
        {0x9A4D, 0x9A81}, {0x9A55, 0x9A84}, {0x9A57, 0x9A8C}, {0x9A5A, 0x60CA}, {0x9A5B, 0x9A7F}, {0x9A5F, 0x9AA4},
        {0x9A62, 0x9A74}, {0x9A65, 0x9AA5}, {0x9A6A, 0x9A8A}, {0x9AAF, 0x80AE}, {0x9ACF, 0x9AC5}, {0x9AD2, 0x810F},
        {0x9AD4, 0x4F53}, {0x9AEE, 0x53D1}, {0x9B06, 0x677E}, {0x9B0D, 0x80E1}, {0x9B1A, 0x987B}, {0x9B22, 0x9B13},
        {0x9B25, 0x6597}, {0x9B27, 0x95F9}, {0x9B29, 0x960B}, {0x9B2E, 0x9604}, {0x9B31, 0x90C1}, {0x9B4E, 0x9B49},
        {0x9B58, 0x9B47}, {0x9B5A, 0x9C7C}, {0x9B6F, 0x9C81}, {0x9B77, 0x9C7F}, {0x9B91, 0x9C8D}, {0x9BAA, 0x9C94},
        {0x9BAB, 0x9C9B}, {0x9BAD, 0x9C91}, {0x9BAE, 0x9C9C}, {0x9BC9, 0x9CA4}, {0x9BCA, 0x9CA8}, {0x9BE7, 0x9CB3},
        {0x9BE8, 0x9CB8}, {0x9BFD, 0x9CAB}, {0x9BFF, 0x9CCA}, {0x9C0D, 0x9CC5}, {0x9C13, 0x9CC3}, {0x9C23, 0x9CA5},
        {0x9C25, 0x9CCF}, {0x9C28, 0x9CCE}, {0x9C29, 0x9CD0}, {0x9C2D, 0x9CCD}, {0x9C31, 0x9CA2}, {0x9C32, 0x9CCC},
        {0x9C3B, 0x9CD7}, {0x9C45, 0x9CD9}, {0x9C48, 0x9CD5}, {0x9C49, 0x9CD6}, {0x9C54, 0x9CDD}, {0x9C56, 0x9CDC},
        {0x9C57, 0x9CDE}, {0x9C58, 0x9C9F}, {0x9C68, 0x9CBF}, {0x9C6D, 0x9C9A}, {0x9C77, 0x9CC4}, {0x9C78, 0x9C88},
        {0x9CE5, 0x9E1F}, {0x9CE9, 0x9E20}, {0x9CF3, 0x51E4}, {0x9CF4, 0x9E23}, {0x9CF6, 0x9E22}, {0x9D06, 0x9E29},
        {0x9D09, 0x9E26}, {0x9D15, 0x9E35}, {0x9D1B, 0x9E33}, {0x9D1F, 0x9E31}, {0x9D23, 0x9E2A}, {0x9D26, 0x9E2F},
        {0x9D28, 0x9E2D}, {0x9D3B, 0x9E3F}, {0x9D3F, 0x9E3D}, {0x9D51, 0x9E43}, {0x9D5D, 0x9E45}, {0x9D61, 0x9E49},
        {0x9D6A, 0x9E4C}, {0x9D6C, 0x9E4F}, {0x9D72, 0x9E4A}, {0x9D87, 0x9E2B}, {0x9D89, 0x9E51}, {0x9DAC, 0x9E27},
        {0x9DAF, 0x83BA}, {0x9DB4, 0x9E64}, {0x9DC2, 0x9E5E}, {0x9DC4, 0x9E21}, {0x9DD3, 0x9E67}, {0x9DD7, 0x9E25},
        {0x9DD9, 0x9E37}, {0x9DF9, 0x9E70}, {0x9DFA, 0x9E6D}, {0x9E15, 0x9E2C}, {0x9E1A, 0x9E66}, {0x9E1B, 0x9E73},
        {0x9E1D, 0x9E42}, {0x9E1E, 0x9E3E}, {0x9E75, 0x5364}, {0x9E79, 0x54B8}, {0x9E7C, 0x78B1}, {0x9E7D, 0x76D0},
        {0x9E97, 0x4E3D}, {0x9EA5, 0x9EA6}, {0x9EA9, 0x9EB8}, {0x9EAF, 0x66F2}, {0x9EB4, 0x66F2}, {0x9EB5, 0x9762},
        {0x9EBC, 0x4E48}, {0x9EDE, 0x70B9}, {0x9EE8, 0x515A}, {0x9EF4, 0x9709}, {0x9EF7, 0x9EE9}, {0x9EFD, 0x9EFE},
        {0x9F08, 0x9CD6}, {0x9F15, 0x51AC}, {0x9F4A, 0x9F50}, {0x9F4B, 0x658B}, {0x9F52, 0x9F7F}, {0x9F54, 0x9F80},
        {0x9F5C, 0x9F87}, {0x9F5F, 0x9F83}, {0x9F61, 0x9F84}, {0x9F63, 0x51FA}, {0x9F66, 0x9F88}, {0x9F6C, 0x9F89},
        {0x9F72, 0x9F8B}, {0x9F77, 0x9F8C}, {0x9F8D, 0x9F99}, {0x9F94, 0x9F9A}, {0x9F95, 0x9F9B}, {0x9F9C, 0x9F9F},
}};

}  // namespace evalkit::text::detail
