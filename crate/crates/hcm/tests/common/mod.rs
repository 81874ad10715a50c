#![allow(dead_code)]

//! Shared fixtures for the integration suites: the frozen special-function
//! oracle table and the reference finger inputs.

use hcm::buckling::AmplitudeClosure;
use hcm::model::{Material, RibbonGeometry, PETG_DENSITY};

/// J_{1/4} on a 50-point log-spaced grid over [1e-3, 50], frozen from a
/// 50-digit arbitrary-precision series evaluation at the exact f64 grid
/// values.
#[allow(clippy::excessive_precision)]
pub const J_QUARTER_GRID: [(f64, f64); 50] = [
    (0.001, 0.164_976_213_106_703_252_978_6),
    (0.001_247_088_708_530_978_8, 0.174_339_428_918_813_245_042),
    (0.001_555_230_246_945_466_1, 0.184_234_042_165_146_737_926_9),
    (0.001_939_510_080_131_536_8, 0.194_690_204_323_292_245_240_3),
    (0.002_418_741_121_014_056, 0.205_739_772_961_134_174_878),
    (0.003_016_384_740_876_190_7, 0.217_416_405_246_525_770_815_7),
    (0.003_761_699_350_931_843_8, 0.229_755_654_627_979_128_629_1),
    (0.004_691_172_785_435_414, 0.242_795_069_491_770_017_862_6),
    (0.005_850_308_610_484_332, 0.256_574_291_648_561_054_753_4),
    (0.007_295_853_809_556_57, 0.271_135_150_927_181_033_015_3),
    (0.009_098_576_904_990_725, 0.286_521_749_553_069_052_935_1),
    (0.011_346_732_521_914_685, 0.302_780_525_704_314_191_369_6),
    (0.014_150_382_006_801_049, 0.319_960_278_585_199_686_865_7),
    (0.017_646_781_622_081_53, 0.338_112_125_754_990_016_406_5),
    (0.022_007_102_102_809_876, 0.357_289_344_374_098_675_865_8),
    (0.027_444_808_539_902_558, 0.377_547_016_680_590_974_853_4),
    (0.034_226_110_837_907_074, 0.398_941_348_513_295_220_836),
    (0.042_682_996_362_883_69, 0.421_528_445_151_607_692_153_6),
    (0.053_229_482_810_421_12, 0.445_362_190_041_018_253_796_1),
    (0.066_381_886_973_820_04, 0.470_490_644_683_968_135_340_7),
    (0.082_784_101_696_030_69, 0.496_950_016_153_108_679_036),
    (0.103_239_118_471_000_12, 0.524_754_632_033_873_710_367_2),
    (0.128_748_338_923_876_38, 0.553_880_376_937_538_659_818_5),
    (0.160_560_599_714_085_76, 0.584_237_453_801_909_633_695_9),
    (0.200_233_310_938_398_86, 0.615_625_792_479_898_494_048),
    (0.249_708_701_143_049_74, 0.647_662_440_610_527_439_068_1),
    (0.311_408_901_617_434_4, 0.679_664_195_593_471_021_597_7),
    (0.388_354_524_943_136_9, 0.710_459_955_701_128_485_548_9),
    (0.484_312_542_963_498_85, 0.738_095_860_553_639_104_142_1),
    (0.603_980_703_729_704, 0.759_385_043_466_899_497_125_7),
    (0.753_217_515_791_908_3, 0.769_253_617_090_540_684_862_1),
    (0.939_329_059_011_844, 0.759_877_472_077_818_732_767_5),
    (1.171_426_663_088_7, 0.719_772_526_180_826_810_151_8),
    (1.460_872_964_410_042_4, 0.633_476_987_143_514_061_193_5),
    (1.821_838_178_513_942_6, 0.483_578_684_265_972_677_930_5),
    (2.271_993_821_195_385_6, 0.258_917_232_267_269_268_071),
    (2.833_377_840_264_917_2, -0.024_999_536_352_732_570_703_44),
    (3.533_473_511_596_273, -0.291_110_225_034_459_042_898),
    (4.406_554_918_205_018_5, -0.378_410_527_693_643_324_725),
    (5.495_364_882_015_136, -0.136_067_494_629_083_259_628_3),
    (6.853_207_493_618_751, 0.247_532_080_840_409_617_719),
    (8.546_557_682_511_834, 0.129_906_643_064_943_201_423),
    (10.658_315_582_669_198, -0.244_031_320_580_378_173_600_6),
    (13.291_865_015_106_564, 0.196_085_133_426_199_447_612),
    (16.576_134_775_657_344, -0.186_265_061_359_195_358_576_2),
    (20.671_910_509_809_962, 0.140_772_088_353_792_249_496),
    (25.779_706_180_546_874, 0.135_196_298_838_305_913_243_4),
    (32.149_580_487_006_36, 0.126_865_448_394_030_206_033_2),
    (40.093_378_809_353_52, 0.044_030_434_633_855_088_163_24),
    (49.999_999_999_999_99, 0.014_106_062_680_889_091_967_94),
];

pub fn reference_material() -> Material {
    Material::new(1.730e9, 0.38, PETG_DENSITY).expect("reference material is valid")
}

pub fn reference_geometry() -> RibbonGeometry {
    RibbonGeometry::new(0.015, 0.000762, 0.0937).expect("reference geometry is valid")
}

pub fn calibrated_closure() -> AmplitudeClosure {
    AmplitudeClosure::Calibrated {
        d_ref: 0.020,
        w_ref: 0.086,
        tilt_ref: 10_f64.to_radians(),
    }
}

pub fn shipped_config_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/reference.toml")
}
