#include "locdesc/bank_seeds.hpp"

// Built-in example banks as raw sentence/answer pairs. Sentences are
// whitespace-canonical; answers follow the "<code>: <surface>" grammar with
// ';' between location descriptions. The bank builder in geoknowledge.cpp
// turns these into annotated messages.

namespace locdesc::detail {

const SeedExample kGeo22Seed[kSeedBankSize] = {
    {"Papa stranded in home. Water rising above waist. HELP 812 Wood Ln, 77828 #houstonflood",
     "C1: 812 Wood Ln, 77828"},
    {"Anyone doing high water rescues in the Pasadena/Deer Park area? My daughter has been stranded in a parking lot all night",
     "C10: Pasadena/Deer Park"},
    {"Allen Parkway, Memorial, Waugh overpass, Spotts park and Buffalo Bayou park completely under water",
     "C2: Allen Parkway; C2: Memorial; C2: Waugh overpass; C7: Spotts park; C7: Buffalo Bayou park"},
    {"Streets Flooded: Almeda Genoa Rd. from Windmill Lakes Blvd. to Rowlett Rd. HurricaneHarvey Houston",
     "C11: Almeda Genoa Rd. from Windmill Lakes Blvd. to Rowlett Rd.; C9: Houston"},
    {"Cleaning supply drive is underway. 9-11 am today at Preston Hollow Presbyterian Church",
     "C8: Preston Hollow Presbyterian Church"},
    {"#Harvey LIVE from San Antonio, TX. Fatal car accident at Ingram Rd., Strong winds.",
     "C9: San Antonio; C9: TX; C2: Ingram Rd."},
    {"9:00AM update video from Hogan St over White Oak Bayou, I-10, I-45: water down about 4' since last night.",
     "C5: Hogan St over White Oak Bayou; C3: I-10; C3: I-45"},
    {"Left Corpus bout to be in San Angelo #HurricaneHarvey Y'all be safe Avoided highway 37 Took the back road",
     "C9: Corpus; C9: San Angelo; C3: highway 37"},
    {"Need trailers/trucks to move dogs from Park Location: Whites Park Pavillion off I-10 exit 61 Anahuac TX",
     "C7: Whites Park Pavillion; C3: I-10; C4: exit 61; C9: Anahuac; C9: TX"},
    {"Townsend exit, Sorters road and Hamblen road is flooded coming from 59 southbound HurricaneHarvery Harvey2017",
     "C4: Townsend exit; C5: Sorters road and Hamblen road; C3: 59 southbound"},
    {"#Harvey does anyone know about the flooding conditions around Cypress Ridge High School?! #HurricaneHarvey",
     "C8: Cypress Ridge High School"},
    {"FYI to any of you in NW Houston/Lakewood Forest, Projections are showing Cypress Creek overflowing at Grant Rd",
     "C10: NW Houston/Lakewood Forest; C5: Cypress Creek overflowing at Grant Rd"},
    {"#HurricaneHarvey family needs rescuing at 11800 Grant Rd. Apt. 1009 in Cypress, Texas 77429, 2 elderly, one is 90 not steady in her feet",
     "C1: 11800 Grant Rd. Apt. 1009 in Cypress, Texas 77429"},
    {"Guys, this is I-45 @ Main Street in Houston. Crazy. #hurricane #harvey. . .",
     "C5: I-45 @ Main Street; C9: Houston"},
    {"Frontage Rd at the river #hurricaneHarvey #hurricaneharvey @ San Jacinto River",
     "C2: Frontage Rd; C6: San Jacinto River"},
    {"Pictures of downed trees and damaged apartment building on Airline Road in Corpus Christi.",
     "C2: Airline Road; C9: Corpus Christi"},
    {"Buffalo Bayou holding steady at 10,000 cfs at the gage near Terry Hershey Park",
     "C6: Buffalo Bayou; C7: Terry Hershey Park"},
    {"Major flooding at Clay Rd & Queenston in west Houston. Lots of rescues going on for ppl trapped...",
     "C5: Clay Rd & Queenston; C9: Houston"},
    {"HELP! A pregnant lady is stuck in her car on I-45 between Cypress Hill & Huffmeister exits #harvey",
     "C11: I-45 between Cypress Hill & Huffmeister exits"},
    {"If you need a place to escape #HurricaneHarvey, The Willie De Leon Civic Center: 300 E. Main St in Uvalde is open as a shelter",
     "C7: The Willie De Leon Civic Center; C1: 300 E. Main St in Uvalde"},
    {"Houston's Buffalo Bayou Park - always among the first to flood. #Harvey",
     "C9: Houston; C7: Buffalo Bayou Park"},
    {"#HurricaneHarvey INTENSE eye wall of category 4 Hurricane Harvey from Rockport, TX",
     "C9: Rockport; C9: TX"},
};

const SeedExample kSet2Seed[kSeedBankSize] = {
    {"Pls rescue 12 day baby family at 7 Woodview St, Houston, 77124, flooding will reach roof soon...",
     "C1: 7 Woodview St, Houston, 77124"},
    {"What's left of my front and back yard in the League City/Dickinson area.",
     "C10: League City/Dickinson"},
    {"Thanks Home Depot in Plano on Custer Rd for your help with Flood Cleanup Kits!",
     "C9: Plano; C2: Custer Rd"},
    {"A short video of the aftermath of HurricaneHarvey in Port Aransas on Cotter Ave. from Alister to Station St., 9/3/...",
     "C9: Port Aransas; C11: Cotter Ave. from Alister to Station St."},
    {"First St Baptist Church needs water & cleaning supplies for Port Arthur community flooded by Harvey",
     "C8: First St Baptist Church; C9: Port Arthur"},
    {"Can anyone get food to memorial Hermann hospital at Gessner Rd in Houston? Request from CajunNavy hurricaneHarvey ...",
     "C8: memorial Hermann hospital; C2: Gessner Rd; C9: Houston"},
    {"Garth road & IH10 at Baytown, Tx. Very High water. Baytown REPORT ON harvey2017",
     "C5: Garth road & IH10; C9: Baytown; C9: Tx; C9: Baytown"},
    {"someone placed a car here for ins purpose. parking lot of I-10 highway. Terry Hershey Park Parking lot. ...",
     "C3: I-10 highway; C7: Terry Hershey Park"},
    {"Need trailers/trucks to move dogs from Park Location: Whites Park Pavillion off I-10 exit 61 Anahuac TX",
     "C7: Whites Park Pavillion; C3: I-10; C4: exit 61; C9: Anahuac; C9: TX"},
    {"59 north, towards the Polk St exit: Go to Convention Center. houstonflood KHOU11 288 texasflood",
     "C3: 59 north; C4: Polk St exit; C7: Convention Center"},
    {"Community is responding at shelters in College Park High School and Magnolia High School in TheWoodlands Harvey ...",
     "C8: College Park High School; C8: Magnolia High School; C9: TheWoodlands"},
    {"FYI to any of you in NW Houston/Lakewood Forest, Projections are showing Cypress Creek overflowing at Grant Rd",
     "C10: NW Houston/Lakewood Forest; C5: Cypress Creek overflowing at Grant Rd"},
    {"Father in law in a wheelchair. Send help to 6312 Bapling Drive, Sugar Land, TX HarveyStorm HarveyRelief HARVEYHELP HoustonStrande",
     "C1: 6312 Bapling Drive, Sugar Land, TX"},
    {"Gas is apparently going up this week in San Antonio because of HurricaneHarvey, it's still 2.51 at the co-op on 17th & 36th ave",
     "C9: San Antonio; C5: 17th & 36th ave"},
    {"White Oak Bayou around Stude Park. HoustonFloods Houston Heights",
     "C6: White Oak Bayou; C7: Stude Park; C9: Houston"},
    {"Worried. A foot 2 go before Oyster Creek starts spilling into Lakes of Brightwater, Lakefront Drive, in front of our house ...",
     "C6: Oyster Creek; C6: Lakes of Brightwater; C2: Lakefront Drive"},
    {"Texas City asking 18 homes on S. Humble Camp Rd. to evacuate in case GCWA reservoir breaches Harvey",
     "C9: Texas City; C2: S. Humble Camp Rd.; C7: GCWA reservoir"},
    {"Major flooding at Clay Rd & Queenston in west Houston. Lots of rescues going on for ppl trapped...",
     "C5: Clay Rd & Queenston; C9: Houston"},
    {"Closed due to train derailment in Harvey on Destrehan Ave between River Rd and 4th St traffic NOLA",
     "C11: Destrehan Ave between River Rd and 4th St"},
    {"Drop Off Location: The Life Center, Charlotte, 2435 Toomey Ave. #SocksForHouston LCFellowship ...",
     "C7: The Life Center; C9: Charlotte; C1: 2435 Toomey Ave"},
    {"Do we know how Minute Maid Park and NRG Park are?? Are they flooded as well as Honda Center? hurricaneharvey",
     "C7: Minute Maid Park; C7: NRG Park; C7: Honda Center"},
    {"Eye wall still very much intact as Harvey is nearly stationary north of Rockport, TX. It's going to be a long nigh ...",
     "C9: Rockport; C9: TX"},
};

const SeedExample kSyntheticSeed[kSeedBankSize] = {
    {"Please help family needs rescue at 112 Wikleson Dr, Houston 42143",
     "C1: 112 Wikleson Dr, Houston 42143"},
    {"Heavy flooding in the Diego City/Amherst area. Please don't go there",
     "C10: Diego City/Amherst"},
    {"Home Depot on Niagara Rd is donating tools for house repair #Harvey",
     "C2: Niagara Rd"},
    {"There is an accident in Port Aransas on Bailey Rd. between Airport Dr and Station St",
     "C9: Port Aransas; C11: Bailey Rd. between Airport Dr and Station St"},
    {"Water & cleaning supplies are needed at Grace Family Bible Church. Please help out...",
     "C8: Grace Family Bible Church"},
    {"Help needed at memorial Hermann hospital at Gessner Rd in Houston! People need water and food there hurricaneHarvey ...",
     "C8: memorial Hermann hospital; C2: Gessner Rd; C9: Houston"},
    {"The intersection of Main road & I-60 is flooded. Very High water. harvey2017",
     "C5: Main road & I-60"},
    {"A person is trapped at the parking lot off I-10 highway near Buffalo Bayou park ...",
     "C3: I-10 highway; C7: Buffalo Bayou park"},
    {"Exit 53 and exit 54 of I-11 are both flooded. Please avoid these two exits. Houston",
     "C4: Exit 53; C4: exit 54; C3: I-11; C9: Houston"},
    {"63 south, towards the Main St exit: Go to Convention Center. houstonflood 288 texasflood",
     "C3: 63 south; C4: Main St exit; C7: Convention Center"},
    {"Shelters are provided in Williamsville High School. Please go there if you need a place to stay ...",
     "C8: Williamsville High School"},
    {"For those of you living in NW Houston/Lakewood Forest, Grant Rd @ Cypress Rd is flooded. Avoid it!",
     "C10: NW Houston/Lakewood Forest; C5: Grant Rd @ Cypress Rd"},
    {"Grandpa needs help at 1831 West Ridge Rd, Sugar Land, TX HarveyStorm HarveyRelief HARVEYHELP HoustonStrande",
     "C1: 1831 West Ridge Rd, Sugar Land, TX"},
    {"High water at the 11th & 30th ave. Houston is battered by heavy rain",
     "C5: 11th & 30th ave; C9: Houston"},
    {"White Oak Bayou around Clear Lake Park. HoustonFloods Houston Heights",
     "C6: White Oak Bayou; C7: Clear Lake Park; C9: Houston"},
    {"This is Buffalo Creek running under Kingsview Bridge near Frontier Drive, crazy ...",
     "C6: Buffalo Creek; C7: Kingsview Bridge; C2: Frontier Drive"},
    {"Families living on S. Washington Rd. will have to evacuate before the water gets too high #Harvey",
     "C2: S. Washington Rd."},
    {"Major flooding at High Rd & 15 Ave. in west Houston. People trapped. Please help...",
     "C5: High Rd & 15 Ave.; C9: Houston"},
    {"Highway 10 between River Rd and 4th St is flooded. Please use local roads NOLA",
     "C11: Highway 10 between River Rd and 4th St"},
    {"If you have things to donate, you can drop them off at ClearField Community Center, Houston, 351 7th Ave.",
     "C7: ClearField Community Center; C9: Houston; C1: 351 7th Ave"},
    {"Hurricane eye wall is approaching Port Aransas, TX. Pray...",
     "C9: Port Aransas; C9: TX"},
    {"Do we know the flooding conditions at Buffalo Bayou Park and Minute Maid Park? Any information can help.",
     "C7: Buffalo Bayou Park; C7: Minute Maid Park"},
};

}  // namespace locdesc::detail
