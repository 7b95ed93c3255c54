//! Correction terms for the Riemann–Siegel formula.
//!
//! The remainder after the main sum expands in powers of x = (t/2π)^{-1/2}
//! as (-1)^{N-1} (t/2π)^{-1/4} [C₀(p) + C₁(p)x + C₂(p)x² + C₃(p)x³ + …],
//! with p the fractional part of √(t/2π) and coefficients built from
//! derivatives of the entire function
//!
//!   Ψ(p) = cos(2π(p² − p − 1/16)) / cos(2πp),
//!
//! namely C₀ = Ψ, C₁ = −Ψ⁽³⁾/(96π²), C₂ = Ψ⁽²⁾/(64π²) + Ψ⁽⁶⁾/(18432π⁴),
//! C₃ = −Ψ⁽¹⁾/(64π²) − Ψ⁽⁵⁾/(3840π⁴) − Ψ⁽⁹⁾/(5308416π⁶).
//!
//! The tables below are the Taylor coefficients of C₀..C₃ around p = 1/2,
//! frozen from a 120-digit power-series computation; truncation at 72
//! terms leaves tails under 1e-36 over the whole range |p − 1/2| ≤ 1/2.

const C0: [f64; 72] = [
    0.3826834323650897717,
    -1.517413438719503311e-121,
    1.748961872310081797,
    -2.690333079974306334e-120,
    2.118025207685496373,
    -4.149866384519767432e-119,
    -0.8707216670511480739,
    -6.586929336071113370e-118,
    -3.473311224346516707,
    -1.053229659246275598e-116,
    -1.662694730899932450,
    -1.685103003532451260e-115,
    1.216731288919232134,
    -2.696153867208201640e-114,
    1.301430416100797577,
    -4.313843850037859658e-113,
    0.03051102182736167242,
    -6.902149724818951004e-112,
    -0.3755803051545095243,
    -1.104343948323743758e-110,
    -0.1085784416564065974,
    -1.766950315967494501e-109,
    0.05183290299954962338,
    -2.827120505307882356e-108,
    0.02999948061990227592,
    -4.523392808449904099e-107,
    -0.002275939670612564226,
    -7.237428493512253630e-106,
    -0.004382647416580338306,
    -1.157988558961825598e-104,
    -0.0004064230183729846993,
    -1.852781694338896960e-103,
    0.0004006097785422113928,
    -2.964450710942230869e-102,
    0.00008971057991388841298,
    -4.743121137507568632e-101,
    -0.00002302565002723910712,
    -7.588993820012109677e-100,
    -9.380006601906792485e-6,
    -1.214239011201937546e-98,
    6.323514947609107504e-7,
    -1.942782417923100073e-97,
    6.551022819231501666e-7,
    -3.108451868676960117e-96,
    2.210523745552697259e-8,
    -4.973522989883136187e-95,
    -3.322316176445628835e-8,
    -7.957636783813017899e-94,
    -3.734910989933656082e-9,
    -1.273221885410082864e-92,
    1.244506706079773920e-9,
    -2.037155016656132582e-91,
    2.476820537650219184e-10,
    -3.259448026649812131e-90,
    -3.284272816891627194e-11,
    -5.215116842639699410e-89,
    -1.130540685229840368e-11,
    -8.344186948223519056e-88,
    4.565463979588693928e-13,
    -1.335069911715763049e-86,
    3.959848094524921520e-13,
    -2.136111858745220878e-85,
    7.849566221259617317e-15,
    -3.417778973992353405e-84,
    -1.105904315099123319e-14,
    -5.468446358387765449e-83,
    -7.738543987641508317e-16,
    -8.749514173420424718e-82,
    2.485775555027137218e-16,
    -1.399922267747267955e-80,
    3.051479718882721791e-17,
    -2.239875628395628728e-79,
];
const C1: [f64; 72] = [
    1.703673325344580515e-122,
    -0.05365020525675069406,
    2.627933587731822802e-120,
    0.1102781874108148244,
    1.459927605716919695e-118,
    1.231720015431522631,
    5.602509975407558015e-117,
    1.263496486279945788,
    1.760721505920779000e-115,
    -1.695108997559503018,
    4.883047832294799381e-114,
    -2.999871196765010089,
    1.242956956531219988e-112,
    -0.1081994495989920864,
    2.972169414129991208e-111,
    1.940766294621271269,
    6.776546217290598022e-110,
    0.7838423561500686533,
    1.488182697561680729e-108,
    -0.5054829667900365919,
    3.170612399588446411e-107,
    -0.3845072349605797405,
    6.588285505576126823e-106,
    0.03747264646531532068,
    1.340572876785388080e-104,
    0.09092026610973176317,
    2.679495817722112573e-103,
    0.01044923755006450922,
    5.273928276151391360e-102,
    -0.01258297965158341650,
    1.024233243147744600e-100,
    -0.003399503721151274085,
    1.965867031202928837e-99,
    0.001041095053771489127,
    3.734096093493477596e-98,
    0.0005010949051118486860,
    7.027213219755344491e-97,
    -0.00003956359669003181560,
    1.311479906731011660e-95,
    -0.00004762459245357189639,
    2.429264319544827752e-94,
    -1.853935533808513227e-6,
    4.469169201113829453e-93,
    3.193691808006897204e-6,
    8.171115275101986704e-92,
    4.090780760850606633e-7,
    1.485485072621439438e-90,
    -1.544662433257663213e-7,
    2.686515556868560685e-89,
    -3.466307491769133172e-8,
    4.835289387578614367e-88,
    5.158711258806154785e-9,
    8.664138450140865562e-87,
    1.984539255640794420e-9,
    1.546103699949665569e-85,
    -8.920820862551490848e-11,
    2.748450317520911989e-84,
    -8.581017807796222642e-11,
    4.868398384574247008e-83,
    -1.879955001383284952e-12,
    8.594786029444975734e-82,
    2.917821950594353786e-12,
    1.512609619565990441e-80,
    2.242464328378943531e-13,
    2.654269737190797512e-79,
    -7.888938771825912504e-14,
    4.644786426815560626e-78,
    -1.057780490885248616e-14,
    8.106967003081066307e-77,
    1.667168683572909141e-15,
    1.411518627517816464e-75,
    3.543209091148631748e-16,
];
const C2: [f64; 72] = [
    0.005188542830293168494,
    -1.874575012922200100e-120,
    0.001237863355225389841,
    -3.560970555915524472e-118,
    -0.1813750572516699741,
    -3.126351556094374073e-116,
    0.1429149274853212654,
    -1.856536235915350825e-114,
    1.330339176668756533,
    -8.661163101933394159e-113,
    0.3522472353403733678,
    -3.426175719570648235e-111,
    -2.421001595891950724,
    -1.201706864660426560e-109,
    -1.676078702253810885,
    -3.845300242962827940e-108,
    1.368941672332837218,
    -1.144513634820504056e-106,
    1.553901943022298322,
    -3.212619500051113423e-105,
    -0.1722164273472998052,
    -8.591374709959622800e-104,
    -0.6359068055045430989,
    -2.205896680586806931e-102,
    -0.09911649873041208105,
    -5.470597643870944663e-101,
    0.1403348006738700895,
    -1.316679540955166520e-99,
    0.04782352019827292236,
    -3.087378883455763718e-98,
    -0.01735604064147978080,
    -7.075064333377744523e-97,
    -0.01022501253402859184,
    -1.588671344036558355e-95,
    0.0009274149159794887899,
    -3.503083364041831285e-94,
    0.001357219437237338535,
    -7.599475520000480884e-93,
    0.00006413690120293880090,
    -1.624502223313596738e-91,
    -0.0001230080569819662988,
    -3.426509279107663047e-90,
    -0.00001831350740478920255,
    -7.139886173458901382e-89,
    7.821628604322627309e-6,
    -1.471248783301143588e-87,
    2.008754248475994550e-6,
    -3.000747860426342040e-86,
    -3.353276539318571374e-7,
    -6.062734118560623971e-85,
    -1.461602091741823093e-7,
    -1.214258429538487593e-83,
    7.261497384040072462e-9,
    -2.412302875513291602e-82,
    7.894805679006706236e-9,
    -4.756378384802148630e-81,
    1.958985823464410454e-10,
    -9.312487183047773742e-80,
    -3.302802050431173021e-10,
    -1.811335736532869294e-78,
    -2.814894537376278742e-11,
    -3.501519557718247932e-77,
    1.084007931514484250e-11,
    -6.729801798442162371e-76,
    1.599196020009304118e-12,
    -1.286427421717774561e-74,
    -2.747810753378103212e-13,
    -2.446481115544172979e-73,
    -6.388781373997463404e-14,
    -4.630168657507647485e-72,
    4.962566999974764002e-15,
    -8.722976558021347588e-71,
];
const C3: [f64; 72] = [
    7.624502140132193629e-121,
    -0.002679432181438913809,
    6.634543323546085524e-118,
    0.02995372109103514964,
    1.374983247473934013e-115,
    -0.04257017254182869799,
    1.537706748866203355e-113,
    -0.2899796577980388751,
    1.194189550776593037e-111,
    0.4888831999235445973,
    7.258059484620337803e-110,
    1.230855876395746081,
    3.694266452256265429e-108,
    -0.8297560708527408704,
    1.643142061370372464e-106,
    -2.249763536666566867,
    6.572073865485729794e-105,
    0.07845139961005471379,
    2.412219482719363186e-103,
    1.746749280086889400,
    8.246979026842997355e-102,
    0.4596808097974993511,
    2.656108988523998690e-100,
    -0.6619353471039774946,
    8.129870594964521453e-99,
    -0.3159044103617363458,
    2.381398474520864651e-97,
    0.1284479254520749599,
    6.713216705844858071e-96,
    0.1007338271662615230,
    1.829686666537542512e-94,
    -0.009530183848825267760,
    4.839791804193160742e-93,
    -0.01926442168751408890,
    1.246435595537346984e-91,
    -0.001246463715876929171,
    3.133885528339500687e-90,
    0.002424396964110308574,
    7.710320209782872968e-89,
    0.0004376476977418570183,
    1.859962812713262484e-87,
    -0.0002071403268700179128,
    4.406873504065571232e-86,
    -0.00006274344504186515561,
    1.027089011124438532e-84,
    0.00001157534381459566935,
    2.357836592601224402e-83,
    5.883854924540379784e-6,
    5.337735964573216743e-82,
    -3.124677400696336221e-7,
    1.192863275585439009e-80,
    -4.024065775498959501e-7,
    2.634013191420651568e-79,
    -1.199110779489632961e-8,
    5.751754074498847612e-78,
    2.096375406393870832e-8,
    1.242975907977953004e-76,
    2.020356022540215378e-9,
    2.660102776237826418e-75,
    -8.440146463909390057e-10,
    5.641219491998398422e-74,
    -1.388884542004012861e-10,
    1.186117522341169857e-72,
    2.588490692171973475e-11,
    2.473901654168319824e-71,
    6.664830790556666111e-12,
    5.120802332185109400e-70,
    -5.577569833891270686e-13,
    1.052394369512579640e-68,
    -2.487835961168490237e-13,
    2.148191485898779551e-67,
    5.220722370970689138e-15,
];

fn horner(coeffs: &[f64; 72], h: f64) -> f64 {
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * h + c;
    }
    acc
}

/// C₀(p) + C₁(p)x + C₂(p)x² + C₃(p)x³ at x = (t/2π)^{-1/2}.
pub(crate) fn rs_correction(p: f64, x: f64) -> f64 {
    let h = p - 0.5;
    ((horner(&C3, h) * x + horner(&C2, h)) * x + horner(&C1, h)) * x + horner(&C0, h)
}
