"""Embedded graph6 data; regenerate with scripts/build_named_data.py."""

GRAPH6 = {
    "gewirtz": (
        "w????????????????????@R?WS@BGBG_?Qg?OM?Ca_?P`??Q`??L_??WW??DP???B_Oe?H@`"
        "_@a@?k?H@_SAO`HA??wDP?A_AcG?W_Cs??Y?EI??EA_oGO?PcHA@?gG_`g?S?i?EC?_Gs?g_"
        "C?Kb?S?DCCW_IO?CbC?aA_OQP?SO?c?ocEG?P?QJ?AOg?_@WCOCo?AKI?WA?_GCo@g_?__QC"
        "_a@H??@S_GcA@?__J?I?SO@@?i@HA?O?_CdCG@C__?"
    ),
    "m22": (
        "~?@L???????????????????????????????????HKo?Er?B`S?KDK?Wac?@Di?AaM??_hg?A"
        "HQO?CkA_?FOB??@D_o??Mw???E`o???Sh_???Rd????@i@OdOAi?oLG@OoE?t?Cb?k@WAWCD"
        "X?_B@GKWK?DC_HH`??@s@dB??QQ@Ka_?CX?DU_??WW?Ys???\\??YJ???BOQOqAAoACKWG_oI"
        "@K@S@gOH_A_K[CBG_@W?YWGD@_@AAdGOUG?Ca@Pb?Ec?A__XKOAgO?OgQH`@L???EGwgAO_T"
        "??_kcGbA?_cOCTPADAACOp?bAgCEGI_O@WKOESOA`?`ChOAK_I_?_DQ`OKOCa?E?GuOOQ?b?"
        "O?GKeOAoA_A_A?dD@CiGA@O?gEGgAh_C_ACOBIS@cGQ?_C?Gop?q_KH???AQPGCK_R?O__KA"
        "R?BG_JA??oGOhOGaaA@CAA?LPOOWOgP?o??SEKC@W@CB??oAKJ?S`A@__G_?"
    ),
    "higman_sims": (
        "~?@csaCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C?????TpADCaDHAAL?H@?GR_OHS_A?"
        "Z?_GAAWGO@D?gO?AF@G?OKGQ?@_OEO??GBL??CCPI??AI_I??Go?T??@?H@o??B?@U???AWG"
        "W??A_C_o???BACo??@GGaPHe?H?Ec@ko?cGK`oi??IEaKDK?GApCpDG?APaCCUg??sSASPo?"
        "AGi?gIY??MK?DChG???kPSkA_?BE?Am_E???_BQcUB????QBpv????DQ?Lg[????SA`iSo??"
        "?GC@eRd?????BQgBSA`I_CGKgIgB?s_DG?sIE?oEg?GKh@GoJ?U??|?HKAAk_O@@B_b@GKWK"
        "?B?o`IH?QRA??W`P?FOESK??qAGaQOHcS??U@?XEO@Tg??@HABKK?LY????PCk\\??YJ???Ag"
        "AoE_c`cCD_@PGoGOp_aB?gG?IwH_I_LA@K@?gY?gBF@?qG?CW`Ok?LKCA_o?gAp@AAdGOUG?"
        "?k_aHCAbE?LG??QqAIA@cp?I`?@CIHADAPKGHg???Ku?@aMI?cGDOACHo?OUQCP`?OQCLD?O"
        "CTPADAACOSiO@a@EDOGKOT?Jb?@?D_p?XP?ICABs?CGdI?Pc@S?AZ?_G@SgSBC@G_@KPS@?C"
        "ZGGH?P_G?Gdc?GKeOAoA_A_Bg@GC@IIAHSOCA_AScGA_Wa_Ie?Q?GOF@KA?XQ_K`AOC?_EAF"
        "?AKKOKgBAO???HoK@HGcAEOH_GOO?XQOKAR?BG_JA??oGcW_O`Q_PDCCAGCCF?o_?tD@@`A`"
        "CB??KCoOA_p__J?G_W?EAa_S?bAoDGO_WGAG?"
    ),
}
