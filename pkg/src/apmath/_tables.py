"""Tabulated digits of e, pi, Euler's gamma and ln 2 (each string is a truncation)."""

E_DIGITS = (
    "2.71828182845904523536028747135266249775724709369995957496696762772407"
    "6630353547594571382178525166427427466391932003059921817413596629043572"
    "9003342952605956307381323286279434907632338298807531952510190115738341"
    "8793070215408914993488416750924476146066808226480016847741185374234544"
    "2437107539077744992069551702761838606261331384583000752044933826560297"
    "6067371132007093287091274437470472306969772093101416928368190255151086"
    "5746377211125238978442505695369677078544996996794686445490598793163688"
    "9230098793127736178215424999229576351482208269895193668033182528869398"
    "4964651058209392398294887933203625094431173012381970684161403970198376"
    "7932068328237646480429531180232878250981945581530175671736133206981125"
    "0996181881593041690351598888519345807273866738589422879228499892086805"
    "8257492796104841984443634632449684875602336248270419786232090021609902"
    "3530436994184914631409343173814364054625315209618369088870701676839642"
    "4378140592714563549061303107208510383750510115747704171898610687396965"
    "5212671546889570350354021234078498193343210681701210056278802351930332"
    "2474501585390473041995777709350366041699732972508868769664035557071622"
    "6844716256079882651787134195124665201030592123667719432527867539855894"
    "4896970964097545918569563802363701621120477427228364896134225164450781"
    "8244235294863637214174023889344124796357437026375529444833799801612549"
    "2278509257782562092622648326277933386566481627725164019105900491644998"
    "28931"
)

PI_DIGITS = (
    "3.14159265358979323846264338327950288419716939937510582097494459230781"
    "6406286208998628034825342117067982148086513282306647093844609550582231"
    "7253594081284811174502841027019385211055596446229489549303819644288109"
    "7566593344612847564823378678316527120190914564856692346034861045432664"
    "8213393607260249141273724587006606315588174881520920962829254091715364"
    "3678925903600113305305488204665213841469519415116094330572703657595919"
    "5309218611738193261179310511854807446237996274956735188575272489122793"
    "8183011949129833673362440656643086021394946395224737190702179860943702"
    "7705392171762931767523846748184676694051320005681271452635608277857713"
    "4275778960917363717872146844090122495343014654958537105079227968925892"
    "3542019956112129021960864034418159813629774771309960518707211349999998"
    "3729780499510597317328160963185950244594553469083026425223082533446850"
    "3526193118817101000313783875288658753320838142061717766914730359825349"
    "0428755468731159562863882353787593751957781857780532171226806613001927"
    "8766111959092164201989380952572010654858632788659361533818279682303019"
    "5203530185296899577362259941389124972177528347913151557485724245415069"
    "5950829533116861727855889075098381754637464939319255060400927701671139"
    "0098488240128583616035637076601047101819429555961989467678374494482553"
    "7977472684710404753464620804668425906949129331367702898915210475216205"
    "6966024058038150193511253382430035587640247496473263914199272604269922"
    "7967823547816360093417216412199245863150302861829745557067498385054945"
    "8858692699569092721079750930295532116534498720275596023648066549911988"
    "1834797753566369807426542527862551818417574672890977772793800081647060"
    "01614524919217321721477235014"
)

GAMMA_DIGITS = (
    "0.57721566490153286060651209008240243104215933593992359880576723488486"
    "7726777664670936947063291746749514631447249807082480960504014486542836"
    "2241739976449235362535003337429373377376739427925952582470949160087352"
    "0394816567085323315177661152862119950150798479374508570574002992135478"
    "6146694029604325421519058775535267331399254012967420513754139549111685"
    "1028079842348775872050384310939973613725530608893312676001724795378367"
    "5927135157722610273492913940798430103417771778088154957066107501016191"
    "6633401522789358679654972520362128792265559536696281763887927268013243"
    "1010476505963703947394957638906572967929601009015125195950922243501409"
    "3498712282479497471956469763185066761290638110518241974448678363808617"
    "4945516989279230187739107294578155431600500218284409605377243420328547"
    "8367015177394398700302370339518328690001558193988042707411542227819716"
    "5230110735658339673487176504919418123000406546931429992977795693031005"
    "0308630341856980323108369164002589297089098548682577736428825395492587"
    "3629596133298574739302373438847070370284412920166417850248733379080562"
    "7549984345907616431671031467107223700218107450444186647591348036690255"
    "3245862544222534518138791243457350136129778227828814894590986384600629"
    "3169471887149587525492366493520473243641097268276160877595088095126208"
    "4045444779922991572482925162512784276596570832146102982146179519579590"
    "9592270420898962797125536321794887376421066060706598256199010288075612"
    "5199137511678217643619057058440783573501580056077457934213144988500786"
    "4151716151945"
)

LOG2_DIGITS = (
    "0.69314718055994530941723212145817656807550013436025525412068000949339"
    "3621969694715605863326996418687542001481020570685733685520235758130557"
    "0326707516350759619307275708283714351903070386238916734711233501153644"
    "9795523912047517268157493206515552473413952588295045300709532636664265"
    "4104239157814952043740430385500801944170641671518644712839968171784546"
    "9570262716310645461502572074024816377733896385506952606683411372738737"
    "2292895649354702576265209885969320196505855476470330679365443254763274"
    "4951250406069438147104689946506220167720424524529612687946546193165174"
    "6813926725041038025462596568691441928716082938031727143677826548775664"
    "8508567407764845146443994046142260319309673540257444607030809608504748"
    "6638523138181676751438667476647890881437141985494231519973548803751658"
    "6127535291661000710535582498794147295092931138971559982056543928717000"
    "7218085761025236889213244971389320378439353088774825970171559107088236"
    "8362758984258918535302436342143670611892367891923723146723217205340164"
    "9256872747782344535347648114941864238677677440606956265737960086707625"
    "7199184734022651462837904883062033061144630073719489002743643965002580"
    "9365194430411911506080948793067865158870900605203468429736193841289652"
    "5565396860221941229242075743217574890977067526871158170511370091589426"
    "6547859596489065305846025866838294002283300538207400567705304678700184"
    "1624044188332327983863490015631218895606505531512721993983320307514084"
    "2609147900126516824344389357247278820548627155274187724300248979454019"
    "6187233980860831664811490930667519339312890431641370681397776498176974"
    "8689038877899912965036192707108892641052309247839173735012298424204995"
    "68935992206602204654941510613"
)
