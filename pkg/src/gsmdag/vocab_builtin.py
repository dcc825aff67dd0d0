"""Built-in hierarchical world vocabulary.

Four categorizations, each with four category layers; every category holds
five named subcategories of twenty item names (100 items per category).
Item names stay clear of the substrings the sentence grammar uses as
delimiters (commas, " and ", " does ", digits, sentence punctuation), never
equal a category name, and never end in "'s <category>" — the loader in
`gsmdag.vocab` enforces all of this at import time.
"""

VOCABULARY_DATA = (
    (
        ("District", (
            ("Residential Districts", (
                "Suburban District", "Downtown Residential District", "Uptown District", "Garden District",
                "Hillside District", "Riverside District", "Lakeview District", "Old Town District",
                "Harbor District", "Parkside District", "Greenbelt District", "Terrace District",
                "Meadow District", "Orchard District", "Brownstone District", "Cottage District",
                "Villa District", "Midtown District", "Bayside District", "Heights District",
            )),
            ("Commercial Districts", (
                "Shopping District", "Business District", "Financial District", "Industrial District",
                "Warehouse District", "Market District", "Restaurant District", "Entertainment District",
                "Arts District", "Fashion District", "Silicon Valley", "Wall Street",
                "Tech Park", "Automotive District", "Jewelry District", "Medical District",
                "Legal District", "Media District", "Research Park", "Manufacturing District",
            )),
            ("Historical Districts", (
                "Colonial District", "Heritage District", "Old Quarter", "French Quarter",
                "Museum District", "Cathedral District", "Castle District", "Victorian District",
                "Gaslamp Quarter", "Antique District", "Monument District", "Cobblestone District",
                "Landmark District", "Pioneer District", "Founders District", "Clock Tower District",
                "Temple District", "Fortress District", "Archive District", "Preservation District",
            )),
            ("Educational Districts", (
                "School District", "Residential College District", "Vocational School District", "Arts Campus",
                "University District", "College Town District", "Academy District", "Campus District",
                "Library District", "Student Quarter", "Research Campus", "Science Campus",
                "Medical School District", "Law School District", "Music Conservatory District", "Boarding School District",
                "Technical Institute District", "Seminary District", "Preparatory School District", "Elementary School District",
            )),
            ("Government Districts", (
                "Capitol District", "Civic District", "Courthouse District", "Embassy District",
                "Federal District", "Municipal District", "Parliament District", "City Hall District",
                "Administrative District", "Diplomatic Quarter", "Justice District", "Treasury District",
                "Customs District", "Military District", "Consulate District", "Bureau District",
                "Registry District", "Senate District", "Council District", "Ministry District",
            )),
        )),
        ("Supermarket", (
            ("Specialty Grocers", (
                "New Seasons Market", "The Fresh Market", "Trader Joe's", "Jungle Jim's International Market",
                "Whole Harvest Market", "Green Valley Grocers", "Harvest Moon Market", "Sprouts Farmers Market",
                "Natural Pantry", "Earthbound Grocers", "Orchard Lane Market", "Willow Creek Grocery",
                "Sunrise Organic Market", "Clover Field Market", "Prairie Rose Grocers", "Golden Gate Grocery",
                "Blue Ridge Market", "Maple Leaf Grocers", "Cedar Grove Market", "Stonebridge Grocery",
            )),
            ("Discount Chains", (
                "Aldi", "Lidl", "Save A Lot", "Grocery Outlet",
                "Price Rite", "WinCo Foods", "Market Basket", "Food Lion",
                "Piggly Wiggly", "Winn Dixie", "Dollar Fresh", "Super Saver",
                "Bargain Foods", "Thrift Mart", "Value Grocers", "Budget Basket",
                "Penny Pantry", "Discount Depot", "Economy Foods", "Clearance Grocers",
            )),
            ("Regional Grocers", (
                "Kroger", "Safeway", "Publix", "Wegmans",
                "Albertsons", "Meijer", "Giant Eagle", "Hy Vee",
                "ShopRite", "Harris Teeter", "Food City", "King Soopers",
                "Ralphs", "Vons", "Jewel Osco", "Acme Markets",
                "Tops Friendly Markets", "Brookshire Brothers", "Raley's", "Schnucks",
            )),
            ("Warehouse Clubs", (
                "Costco", "Sam's Club", "BJ's Wholesale Club", "Restaurant Depot",
                "Smart Foodservice", "Boxed Wholesale", "Bulk Barn", "Costless Wholesale",
                "Mega Warehouse Foods", "Wholesale Harvest", "Club Market", "Big Box Grocers",
                "Case Lot Foods", "Pallet Foods", "Warehouse Grocers", "Bulk Basket",
                "Stock Up Club", "Quantity Foods", "Carton Club", "Crate Depot",
            )),
            ("Convenience Chains", (
                "Seven Eleven", "Circle K", "Wawa", "Sheetz",
                "QuikTrip", "Casey's", "Speedway", "Cumberland Farms",
                "Royal Farms", "Kwik Trip", "RaceTrac", "Loaf N Jug",
                "Corner Pantry", "Quick Stop Market", "Minute Mart", "Handy Mart",
                "Express Lane Foods", "Pit Stop Grocers", "Night Owl Market", "Morning Star Market",
            )),
        )),
        ("Product", (
            ("Canned Foods", (
                "Canned Tomatoes", "Canned Corn", "Canned Beans", "Canned Tuna",
                "Canned Salmon", "Canned Peaches", "Canned Pears", "Canned Pineapple",
                "Canned Soup", "Canned Chili", "Canned Olives", "Canned Mushrooms",
                "Canned Carrots", "Canned Peas", "Canned Pumpkin", "Canned Sardines",
                "Canned Chicken", "Canned Beets", "Canned Artichokes", "Canned Green Beans",
            )),
            ("Snack Foods", (
                "Potato Chips", "Pretzels", "Popcorn", "Candy Bars",
                "Gummy Candy", "Cookies", "Crackers", "Granola Bars",
                "Fruit Snacks", "Cheese Puffs", "Nuts", "Trail Mix",
                "Beef Jerky", "Rice Cakes", "Yogurt Covered Raisins", "Chocolate Covered Pretzels",
                "Tortilla Chips", "Salsa", "Hummus", "Dried Fruit",
            )),
            ("Beverages", (
                "Orange Juice", "Apple Juice", "Grape Juice", "Cranberry Juice",
                "Lemonade", "Iced Tea", "Green Tea", "Black Tea",
                "Coffee", "Cold Brew Coffee", "Sparkling Water", "Spring Water",
                "Coconut Water", "Energy Drink", "Sports Drink", "Root Beer",
                "Ginger Ale", "Cola", "Tonic Water", "Fruit Punch",
            )),
            ("Baked Goods", (
                "Sourdough Bread", "Whole Wheat Bread", "Rye Bread", "Baguette",
                "Croissant", "Bagels", "Muffins", "Scones",
                "Dinner Rolls", "Cinnamon Rolls", "Danish Pastry", "Pound Cake",
                "Carrot Cake", "Cheesecake", "Brownies", "Apple Pie",
                "Pumpkin Pie", "Pita Bread", "Focaccia", "Banana Bread",
            )),
            ("Dairy Products", (
                "Cheese", "Parmesan Cheese", "Goat Cheese", "Ice Cream",
                "Whole Milk", "Skim Milk", "Heavy Cream", "Sour Cream",
                "Greek Yogurt", "Plain Yogurt", "Butter", "Cream Cheese",
                "Cottage Cheese", "Cheddar Cheese", "Mozzarella Cheese", "Swiss Cheese",
                "Provolone Cheese", "Whipped Cream", "Buttermilk", "Kefir",
            )),
        )),
        ("Ingredient", (
            ("Fruits", (
                "Grape", "Pineapple", "Banana", "Pear",
                "Apple", "Orange", "Mango", "Peach",
                "Plum", "Cherry", "Strawberry", "Blueberry",
                "Raspberry", "Watermelon", "Cantaloupe", "Kiwi",
                "Lemon", "Lime", "Apricot", "Fig",
            )),
            ("Vegetables", (
                "Carrot", "Potato", "Onion", "Garlic",
                "Tomato", "Spinach", "Kale", "Broccoli",
                "Cauliflower", "Zucchini", "Eggplant", "Cucumber",
                "Celery", "Asparagus", "Bell Pepper", "Mushroom",
                "Cabbage", "Lettuce", "Radish", "Beet",
            )),
            ("Grains", (
                "Rice", "Brown Rice", "Quinoa", "Oats",
                "Barley", "Wheat Flour", "Cornmeal", "Couscous",
                "Bulgur", "Millet", "Rye Flour", "Semolina",
                "Buckwheat", "Farro", "Spelt", "White Flour",
                "Bread Crumbs", "Pasta", "Egg Noodles", "Polenta",
            )),
            ("Spices", (
                "Salt", "Black Pepper", "Paprika", "Cumin",
                "Coriander", "Turmeric", "Cinnamon", "Nutmeg",
                "Clove", "Ginger", "Oregano", "Basil",
                "Thyme", "Rosemary", "Sage", "Bay Leaf",
                "Chili Powder", "Curry Powder", "Vanilla", "Saffron",
            )),
            ("Proteins", (
                "Chicken Breast", "Ground Beef", "Pork Loin", "Salmon Fillet",
                "Shrimp", "Tofu", "Tempeh", "Black Beans",
                "Chickpeas", "Lentils", "Eggs", "Turkey Breast",
                "Lamb Chop", "Crab Meat", "Scallops", "Tuna Steak",
                "Duck Breast", "Bacon", "Ham", "Sausage",
            )),
        )),
    ),
    (
        ("Zoo", (
            ("City Zoos", (
                "Central Park Zoo", "Lincoln Park Zoo", "Bronx Zoo", "San Diego Zoo",
                "Brookfield Zoo", "Riverbanks Zoo", "Cheyenne Mountain Zoo", "Woodland Park Zoo",
                "Franklin Park Zoo", "Memphis Zoo", "Denver Zoo", "Houston Zoo",
                "Oakland Zoo", "Phoenix Zoo", "Toledo Zoo", "Audubon Zoo",
                "Cincinnati Zoo", "Columbus Zoo", "Sacramento Zoo", "Roger Williams Park Zoo",
            )),
            ("Safari Parks", (
                "Serengeti Safari Park", "Savanna Adventure Park", "Wild Plains Safari", "Lion Country Safari",
                "Safari West", "Kalahari Safari Park", "Thorn Tree Safari", "Acacia Safari Park",
                "Baobab Safari Park", "Zebra Crossing Safari", "Giraffe Ridge Safari", "Rhino Valley Park",
                "Elephant Plains Safari", "Big Five Safari Park", "Okavango Safari Park", "Sunset Savanna Park",
                "Dusty Trail Safari", "Wildebeest Crossing Park", "Antelope Flats Safari", "Cheetah Run Safari Park",
            )),
            ("Aquatic Parks", (
                "SeaWorld Orlando", "Shedd Aquarium Park", "Monterey Bay Aquatic Park", "Coral Reef Park",
                "Dolphin Cove Park", "Manatee Springs Park", "Blue Lagoon Aquatic Park", "Tide Pool Park",
                "Pacific Shores Aquatic Park", "Atlantic Depths Park", "Kelp Forest Park", "Stingray Bay Park",
                "Penguin Point Park", "Sea Lion Harbor Park", "Otter Creek Aquatic Park", "Whale Watch Park",
                "Seahorse Sanctuary Park", "Jellyfish Grotto Park", "Turtle Bay Aquatic Park", "Shark Reef Park",
            )),
            ("Wildlife Sanctuaries", (
                "Eagle Ridge Sanctuary", "Wolf Hollow Sanctuary", "Bear Creek Sanctuary", "Fox Glen Sanctuary",
                "Deer Meadow Sanctuary", "Heron Marsh Sanctuary", "Badger Burrow Sanctuary", "Moose Lake Sanctuary",
                "Bison Prairie Sanctuary", "Crane Wetland Sanctuary", "Falcon Cliff Sanctuary", "Otter Pond Sanctuary",
                "Lynx Forest Sanctuary", "Beaver Dam Sanctuary", "Raven Wood Sanctuary", "Swan Lake Sanctuary",
                "Turtle Marsh Sanctuary", "Hawk Hill Sanctuary", "Elk Valley Sanctuary", "Pelican Bay Sanctuary",
            )),
            ("Conservation Centers", (
                "Rainforest Conservation Center", "Wetland Conservation Center", "Desert Conservation Center", "Alpine Conservation Center",
                "Prairie Conservation Center", "Marine Conservation Center", "Tundra Conservation Center", "Island Conservation Center",
                "River Delta Conservation Center", "Mangrove Conservation Center", "Coral Conservation Center", "Grassland Conservation Center",
                "Woodland Conservation Center", "Highland Conservation Center", "Lowland Conservation Center", "Canyon Conservation Center",
                "Glacier Conservation Center", "Volcano Conservation Center", "Cave Conservation Center", "Reef Conservation Center",
            )),
        )),
        ("Enclosure", (
            ("Aviaries", (
                "Owl Forest", "Parrot Paradise", "Flamingo Lagoon", "Hummingbird Garden",
                "Eagle Aerie", "Falcon Mews", "Toucan Treetops", "Macaw Canopy",
                "Songbird Meadow", "Crane Court", "Peacock Promenade", "Swan Pond",
                "Pelican Pier", "Vulture Crag", "Raven Roost", "Kingfisher Creek",
                "Heron Haven", "Stork Landing", "Cockatoo Grove", "Finch Garden",
            )),
            ("Primate Habitats", (
                "Gorilla Grove", "Chimpanzee Canopy", "Orangutan Forest", "Lemur Island",
                "Baboon Ridge", "Gibbon Swing", "Monkey Maze", "Capuchin Corner",
                "Marmoset Meadow", "Tamarin Trails", "Mandrill Mountain", "Howler Hollow",
                "Spider Monkey Spire", "Macaque Mount", "Bonobo Basin", "Colobus Cliff",
                "Langur Lookout", "Squirrel Monkey Springs", "Proboscis Point", "Sifaka Slope",
            )),
            ("Big Cat Habitats", (
                "Lion Rock", "Tiger Territory", "Leopard Ledge", "Cheetah Plains",
                "Jaguar Jungle", "Cougar Canyon", "Lynx Lair", "Panther Grotto",
                "Snow Leopard Summit", "Ocelot Outpost", "Serval Savanna", "Caracal Cove",
                "Bobcat Bluff", "Puma Peak", "Tiger Falls", "Lion Overlook",
                "Leopard Grove", "Cheetah Run", "Jaguar Falls", "Wildcat Woods",
            )),
            ("Reptile Houses", (
                "Crocodile Creek", "Alligator Alley", "Python Pit", "Cobra Castle",
                "Iguana Island", "Tortoise Terrace", "Gecko Grotto", "Chameleon Corner",
                "Viper Valley", "Boa Bend", "Monitor Mesa", "Skink Springs",
                "Terrapin Pond", "Rattlesnake Ridge", "Anole Arbor", "Komodo Keep",
                "Turtle Cove", "Salamander Stream", "Newt Nook", "Frog Bog",
            )),
            ("Aquatic Exhibits", (
                "Dolphin Bay", "Seal Shores", "Walrus Waters", "Manatee Marsh",
                "Otter Falls", "Shark Tank", "Stingray Shallows", "Jellyfish Gallery",
                "Octopus Grotto", "Coral Cavern", "Kelp Kingdom", "Tide Touch Pool",
                "Seahorse Stable", "Puffin Plunge", "Beluga Basin", "Orca Overlook",
                "Sea Turtle Shoals", "Eel Estuary", "Piranha Pool", "Lagoon Lookout",
            )),
        )),
        ("Animal", (
            ("Land Mammals", (
                "Elephant", "Raccoon", "Giraffe", "Zebra",
                "Lion", "Tiger", "Bear", "Wolf",
                "Fox", "Deer", "Rabbit", "Squirrel",
                "Kangaroo", "Koala", "Panda", "Rhinoceros",
                "Hippopotamus", "Camel", "Leopard", "Monkey",
            )),
            ("Birds", (
                "Owl", "Parrot", "Eagle", "Falcon",
                "Penguin", "Flamingo", "Toucan", "Macaw",
                "Crane", "Peacock", "Swan", "Pelican",
                "Vulture", "Raven", "Kingfisher", "Heron",
                "Stork", "Cockatoo", "Finch", "Hawk",
            )),
            ("Reptiles", (
                "Crocodile", "Alligator", "Python", "Cobra",
                "Iguana", "Tortoise", "Gecko", "Chameleon",
                "Viper", "Boa", "Monitor Lizard", "Skink",
                "Terrapin", "Rattlesnake", "Anole", "Komodo Dragon",
                "Turtle", "Salamander", "Newt", "Frog",
            )),
            ("Marine Animals", (
                "Dolphin", "Seal", "Walrus", "Manatee",
                "Otter", "Shark", "Stingray", "Jellyfish",
                "Octopus", "Squid", "Sea Lion", "Beluga Whale",
                "Orca", "Seahorse", "Eel", "Piranha",
                "Clownfish", "Lobster", "Crab", "Starfish",
            )),
            ("Insects", (
                "Butterfly", "Moth", "Beetle", "Ladybug",
                "Dragonfly", "Grasshopper", "Cricket", "Mantis",
                "Firefly", "Honeybee", "Bumblebee", "Wasp",
                "Ant", "Caterpillar", "Cicada", "Damselfly",
                "Katydid", "Weevil", "Scarab", "Walking Stick",
            )),
        )),
        ("Bone", (
            ("Skull Bones", (
                "Frontal Bone", "Parietal Bone", "Temporal Bone", "Occipital Bone",
                "Sphenoid Bone", "Ethmoid Bone", "Nasal Bone", "Zygomatic Bone",
                "Maxilla", "Mandible", "Lacrimal Bone", "Palatine Bone",
                "Vomer", "Hyoid Bone", "Incus", "Malleus",
                "Stapes", "Inferior Nasal Concha", "Orbital Plate", "Mastoid Process",
            )),
            ("Spine Bones", (
                "Atlas Vertebra", "Axis Vertebra", "Cervical Vertebra", "Thoracic Vertebra",
                "Lumbar Vertebra", "Sacrum", "Coccyx", "Spinous Process",
                "Transverse Process", "Vertebral Arch", "Vertebral Body", "Facet Joint",
                "Lamina", "Pedicle", "Dens", "Sacral Ala",
                "Coccygeal Cornu", "Uncinate Process", "Vertebral Foramen", "Costal Demifacet",
            )),
            ("Arm Bones", (
                "Humerus", "Radius", "Ulna", "Scapula",
                "Clavicle", "Carpal Bone", "Metacarpal Bone", "Proximal Phalanx",
                "Middle Phalanx", "Distal Phalanx", "Scaphoid", "Lunate",
                "Triquetrum", "Pisiform", "Trapezium", "Capitate",
                "Hamate", "Olecranon", "Coronoid Process", "Glenoid Cavity",
            )),
            ("Leg Bones", (
                "Femur", "Tibia", "Fibula", "Patella",
                "Talus", "Calcaneus", "Navicular", "Cuboid",
                "Medial Cuneiform", "Intermediate Cuneiform", "Lateral Cuneiform", "Metatarsal Bone",
                "Hallux Phalanx", "Femoral Head", "Femoral Neck", "Greater Trochanter",
                "Lesser Trochanter", "Tibial Plateau", "Medial Malleolus", "Lateral Malleolus",
            )),
            ("Rib Cage Bones", (
                "True Rib", "False Rib", "Floating Rib", "First Rib",
                "Second Rib", "Sternum", "Manubrium", "Sternal Body",
                "Xiphoid Process", "Costal Cartilage", "Costal Groove", "Rib Head",
                "Rib Neck", "Rib Tubercle", "Rib Shaft", "Costal Angle",
                "Sternal Angle", "Jugular Notch", "Clavicular Notch", "Costal Facet",
            )),
        )),
    ),
    (
        ("School", (
            ("Public High Schools", (
                "Central High", "Riverview High", "Northside High", "Southgate High",
                "Eastwood High", "Westfield High", "Lakeside High", "Hillcrest High",
                "Oakmont High", "Maplewood High", "Pinecrest High", "Cedarville High",
                "Brookfield High", "Fairview High", "Greenfield High", "Kingsley High",
                "Jefferson High", "Lincoln High", "Roosevelt High", "Franklin High",
            )),
            ("Private Academies", (
                "St Andrews Academy", "Blue Mountain Academy", "Silver Lake Academy", "Crestwood Academy",
                "Ashford Academy", "Belmont Academy", "Claremont Academy", "Devonshire Academy",
                "Eastbrook Academy", "Foxcroft Academy", "Glenwood Academy", "Harrington Academy",
                "Ivywood Academy", "Juniper Academy", "Kensington Academy", "Lakeview Academy",
                "Montrose Academy", "Northgate Academy", "Oakridge Academy", "Pembroke Academy",
            )),
            ("Charter Schools", (
                "Liberty Charter School", "Horizon Charter School", "Summit Charter School", "Compass Charter School",
                "Beacon Charter School", "Aspire Charter School", "Keystone Charter School", "Lighthouse Charter School",
                "Meridian Charter School", "Nova Charter School", "Odyssey Charter School", "Pinnacle Charter School",
                "Quest Charter School", "Riverbend Charter School", "Starlight Charter School", "Trailblazer Charter School",
                "Unity Charter School", "Venture Charter School", "Wildflower Charter School", "Zenith Charter School",
            )),
            ("Magnet Schools", (
                "Science Magnet School", "Arts Magnet School", "Engineering Magnet School", "Technology Magnet School",
                "Mathematics Magnet School", "Language Magnet School", "Medical Magnet School", "Aerospace Magnet School",
                "Performing Arts Magnet School", "Visual Arts Magnet School", "Humanities Magnet School", "Journalism Magnet School",
                "Law Magnet School", "Business Magnet School", "Environmental Magnet School", "Marine Science Magnet School",
                "Culinary Magnet School", "Design Magnet School", "Robotics Magnet School", "Music Magnet School",
            )),
            ("International Schools", (
                "Geneva International School", "Vienna International School", "Tokyo International School", "Lisbon International School",
                "Madrid International School", "Oslo International School", "Prague International School", "Quito International School",
                "Rome International School", "Seoul International School", "Taipei International School", "Utrecht International School",
                "Warsaw International School", "Zurich International School", "Athens International School", "Berlin International School",
                "Cairo International School", "Dublin International School", "Helsinki International School", "Istanbul International School",
            )),
        )),
        ("Classroom", (
            ("Arts Classrooms", (
                "Dance Studio", "Film Studio", "Painting Studio", "Sculpture Studio",
                "Ceramics Studio", "Photography Studio", "Printmaking Studio", "Drawing Studio",
                "Music Room", "Choir Room", "Band Room", "Orchestra Room",
                "Theater Workshop", "Drama Room", "Animation Studio", "Textile Studio",
                "Jewelry Workshop", "Calligraphy Room", "Mural Studio", "Puppetry Workshop",
            )),
            ("Science Classrooms", (
                "Chemistry Lab", "Biology Lab", "Physics Lab", "Earth Science Room",
                "Astronomy Room", "Botany Greenhouse", "Zoology Room", "Geology Room",
                "Microscopy Lab", "Genetics Lab", "Anatomy Room", "Ecology Room",
                "Meteorology Room", "Oceanography Room", "Forensics Lab", "Dissection Room",
                "Observatory Room", "Planetarium Room", "Herbarium Room", "Aquarium Room",
            )),
            ("Humanities Classrooms", (
                "History Room", "Geography Room", "Literature Room", "Philosophy Room",
                "Economics Room", "Civics Room", "Psychology Room", "Sociology Room",
                "Anthropology Room", "Archaeology Room", "Latin Room", "French Room",
                "Spanish Room", "German Room", "Mandarin Room", "Debate Room",
                "Rhetoric Room", "Creative Writing Room", "Journalism Room", "Mythology Room",
            )),
            ("Athletics Rooms", (
                "Gymnasium", "Weight Room", "Wrestling Room", "Yoga Studio",
                "Spin Room", "Swimming Pool Hall", "Basketball Court Room", "Volleyball Court Room",
                "Badminton Hall", "Fencing Hall", "Boxing Gym", "Martial Arts Dojo",
                "Climbing Wall Room", "Locker Room", "Trainer Room", "Pilates Studio",
                "Gymnastics Hall", "Archery Range", "Table Tennis Hall", "Squash Court Room",
            )),
            ("Technology Labs", (
                "Computer Lab", "Robotics Lab", "Electronics Lab", "Woodshop",
                "Metal Shop", "Auto Shop", "Welding Shop", "Coding Lab",
                "Modeling Lab", "CAD Lab", "Media Lab", "Broadcast Studio",
                "Recording Studio", "Server Room", "Makerspace", "Drafting Room",
                "Circuit Lab", "Drone Lab", "Game Design Lab", "Virtual Reality Lab",
            )),
        )),
        ("Backpack", (
            ("School Backpacks", (
                "School Daypack", "Messenger Backpack", "Bookbag", "Laptop Backpack",
                "Rolling Backpack", "Mini Backpack", "Classic Backpack", "Campus Backpack",
                "Library Tote Pack", "Student Rucksack", "Lunch Compartment Backpack", "Clear Backpack",
                "Ergonomic Backpack", "Lightweight Daypack", "Canvas Bookpack", "Padded Backpack",
                "Reflective Backpack", "Zipper Daypack", "Buckle Backpack", "Drawstring Daypack",
            )),
            ("Hiking Backpacks", (
                "Trail Daypack", "Summit Pack", "Ridge Rucksack", "Alpine Pack",
                "Canyon Pack", "Glacier Pack", "Switchback Pack", "Basecamp Pack",
                "Scrambler Pack", "Traverse Pack", "Wilderness Pack", "Overlook Pack",
                "Cascade Pack", "Timberline Pack", "Foothill Pack", "Highpoint Pack",
                "Boulder Pack", "Creekside Pack", "Meadow Pack", "Vista Pack",
            )),
            ("Travel Backpacks", (
                "Weekender Backpack", "Carry On Backpack", "Convertible Travel Pack", "Expandable Travel Pack",
                "Anti Theft Backpack", "Garment Backpack", "Wheeled Travel Pack", "Duffel Backpack",
                "Commuter Pack", "Jetsetter Pack", "Nomad Pack", "Passport Pack",
                "Transit Pack", "Voyager Pack", "Globetrotter Pack", "Layover Pack",
                "Redeye Pack", "Wanderer Pack", "Excursion Pack", "Itinerary Pack",
            )),
            ("Sports Bags", (
                "Gym Sack", "Cleat Bag", "Racket Backpack", "Ball Bag",
                "Swim Bag", "Hockey Bag", "Lacrosse Pack", "Soccer Sack",
                "Baseball Bat Pack", "Tennis Pack", "Golf Carry Bag", "Ski Boot Pack",
                "Skate Bag", "Climbing Gear Pack", "Yoga Mat Bag", "Boxing Gear Bag",
                "Track Spike Sack", "Cricket Kit Bag", "Rowing Gear Bag", "Fencing Gear Bag",
            )),
            ("Messenger Bags", (
                "Courier Bag", "Satchel Bag", "Crossbody Messenger", "Leather Messenger",
                "Canvas Messenger", "Bike Messenger Bag", "Laptop Messenger", "Field Bag",
                "Dispatch Bag", "Postal Bag", "Saddle Bag", "Map Bag",
                "Utility Messenger", "Flap Messenger", "Urban Messenger", "Vintage Messenger",
                "Slim Messenger", "Waxed Messenger", "Buckle Messenger", "Strap Messenger",
            )),
        )),
        ("Stationery", (
            ("Writing Instruments", (
                "Ballpoint Pen", "Fountain Pen", "Gel Pen", "Rollerball Pen",
                "Felt Tip Pen", "Mechanical Pencil", "Wooden Pencil", "Charcoal Pencil",
                "Highlighter", "Permanent Marker", "Whiteboard Marker", "Calligraphy Pen",
                "Fineliner", "Brush Pen", "Chalk Stick", "Grease Pencil",
                "Quill Pen", "Stylus Pen", "Erasable Pen", "Multicolor Pen",
            )),
            ("Paper Products", (
                "Notebook", "Legal Pad", "Sticky Notes", "Index Cards",
                "Graph Paper", "Construction Paper", "Loose Leaf Paper", "Sketchbook",
                "Planner Refill", "Envelope", "Notepad", "Flashcards",
                "Tracing Paper", "Cardstock", "Origami Paper", "Carbon Paper",
                "Composition Book", "Spiral Notebook", "Journal", "Memo Pad",
            )),
            ("Desk Tools", (
                "Stapler", "Staple Remover", "Tape Dispenser", "Scissors",
                "Hole Punch", "Paper Clip", "Binder Clip", "Rubber Band",
                "Ruler", "Protractor", "Compass Tool", "Letter Opener",
                "Pencil Sharpener", "Eraser", "Correction Tape", "Glue Stick",
                "Push Pin", "Thumbtack", "Clipboard", "Paperweight",
            )),
            ("Art Supplies", (
                "Watercolor Set", "Acrylic Paint Tube", "Oil Pastel", "Chalk Pastel",
                "Colored Pencil", "Crayon", "Paintbrush", "Palette Knife",
                "Canvas Board", "Sketch Pencil", "Kneaded Eraser", "Blending Stump",
                "Ink Bottle", "Airbrush", "Modeling Clay", "Glitter Glue",
                "Fabric Marker", "Stencil Set", "Washi Tape", "Spray Fixative",
            )),
            ("Organizers", (
                "Ring Binder", "Folder", "Expanding File", "Document Wallet",
                "Pencil Case", "Pen Holder", "Desk Tray", "Drawer Organizer",
                "Magazine File", "Accordion Folder", "Binder Divider", "Sheet Protector",
                "Label Maker", "File Cabinet Insert", "Desktop Caddy", "Book Stand",
                "Letter Sorter", "Cable Organizer", "Sticky Note Dispenser", "Business Card Holder",
            )),
        )),
    ),
    (
        ("Ecosystems", (
            ("Forest Ecosystems", (
                "Tropical Rainforest", "Temperate Rainforest", "Boreal Forest", "Deciduous Forest",
                "Coniferous Forest", "Cloud Forest", "Mangrove Forest", "Bamboo Forest",
                "Redwood Forest", "Oak Woodland", "Pine Barrens", "Birch Forest",
                "Eucalyptus Grove", "Montane Forest", "Lowland Rainforest", "Dry Forest",
                "Swamp Forest", "Gallery Forest", "Old Growth Forest", "Secondary Forest",
            )),
            ("Aquatic Ecosystems", (
                "Coral Reef", "Kelp Bed", "Open Ocean", "Deep Sea Vent",
                "Estuary", "Salt Marsh", "Freshwater Lake", "Alpine Lake",
                "River Delta", "Mountain Stream", "Farm Pond", "Tidal Pool",
                "Seagrass Meadow", "Oyster Reef", "Lagoon", "Fjord",
                "Bayou", "Billabong", "Hot Spring", "Glacial Lake",
            )),
            ("Grassland Ecosystems", (
                "African Savanna", "Tallgrass Prairie", "Shortgrass Prairie", "Pampas",
                "Steppe", "Meadow", "Chaparral", "Scrubland",
                "Heathland", "Moorland", "Veld", "Cerrado",
                "Llanos", "Outback Grassland", "Alpine Meadow", "Floodplain Grassland",
                "Coastal Prairie", "Mixed Grass Prairie", "Montane Grassland", "Savanna Woodland",
            )),
            ("Desert Ecosystems", (
                "Sahara Desert", "Gobi Desert", "Mojave Desert", "Sonoran Desert",
                "Atacama Desert", "Kalahari Desert", "Namib Desert", "Thar Desert",
                "Painted Desert", "High Desert", "Salt Flat", "Sand Dune Field",
                "Rocky Desert", "Coastal Desert", "Cold Desert", "Oasis",
                "Badlands", "Mesa Desert", "Canyon Desert", "Semidesert",
            )),
            ("Polar Ecosystems", (
                "Arctic Tundra", "Alpine Tundra", "Ice Sheet", "Ice Shelf",
                "Glacier Field", "Polar Desert", "Pack Ice Zone", "Permafrost Plain",
                "Iceberg Field", "Frozen Fjord", "Snowfield", "Polar Coast",
                "Sea Ice Edge", "Nunatak Ridge", "Meltwater Basin", "Crevasse Field",
                "Polynya", "Firn Field", "Moraine Plain", "Katabatic Slope",
            )),
        )),
        ("Creatures", (
            ("Predators", (
                "Gray Wolf", "Polar Bear", "Snowy Owl", "Great White Shark",
                "Bald Eagle", "Mountain Lion", "Spotted Hyena", "Komodo Monitor",
                "King Cobra", "Peregrine Falcon", "Orca Whale", "Honey Badger",
                "Tasmanian Devil", "Secretary Bird", "Electric Eel", "Praying Mantis",
                "Goliath Heron", "Barracuda", "Caracal Cat", "Fossa",
            )),
            ("Herbivores", (
                "White Rhinoceros", "African Elephant", "Plains Bison", "Mountain Goat",
                "Giant Panda", "Red Kangaroo", "Green Iguana", "Howler Monkey",
                "Giant Tortoise", "West Indian Manatee", "Moose", "Caribou",
                "Gazelle", "Impala", "Wildebeest", "Capybara",
                "Porcupine", "Chinchilla", "Musk Ox", "Tapir",
            )),
            ("Scavengers", (
                "Turkey Vulture", "Black Vulture", "Golden Jackal", "Striped Hyena",
                "Common Raven", "Carrion Crow", "Marabou Stork", "Burying Beetle",
                "Carrion Beetle", "Blowfly", "Opossum", "Coyote",
                "Red Fox", "Wolverine", "Snapping Turtle", "Hermit Crab",
                "Ghost Crab", "Herring Gull", "Andean Condor", "Tasmanian Quoll",
            )),
            ("Pollinators", (
                "Honey Bee", "Bumble Bee", "Carpenter Bee", "Mason Bee",
                "Leafcutter Bee", "Monarch Butterfly", "Swallowtail Butterfly", "Painted Lady Butterfly",
                "Hawk Moth", "Hummingbird Moth", "Ruby Throated Hummingbird", "Honeyeater Bird",
                "Sunbird", "Flower Fly", "Hoverfly", "Fig Wasp",
                "Yucca Moth", "Nectar Bat", "Fruit Bat", "Blue Banded Bee",
            )),
            ("Decomposers", (
                "Earthworm", "Red Wiggler Worm", "Millipede", "Pill Bug",
                "Sow Bug", "Springtail", "Soil Mite", "Dung Beetle",
                "Termite", "Wood Louse", "Slime Mold", "Bread Mold",
                "Oyster Mushroom", "Shelf Fungus", "Puffball Fungus", "Soil Bacterium",
                "Compost Worm", "Rove Beetle", "Fungus Gnat", "Bark Beetle",
            )),
        )),
        ("Organs", (
            ("Circulatory Organs", (
                "Heart", "Aorta", "Pulmonary Artery", "Pulmonary Vein",
                "Vena Cava", "Carotid Artery", "Jugular Vein", "Femoral Artery",
                "Coronary Artery", "Capillary Bed", "Spleen", "Bone Marrow",
                "Lymph Node", "Thymus", "Hepatic Portal Vein", "Renal Artery",
                "Brachial Artery", "Subclavian Vein", "Iliac Artery", "Saphenous Vein",
            )),
            ("Digestive Organs", (
                "Stomach", "Liver", "Pancreas", "Gallbladder",
                "Esophagus", "Small Intestine", "Large Intestine", "Duodenum",
                "Jejunum", "Ileum", "Colon", "Rectum",
                "Appendix", "Cecum", "Salivary Gland", "Tongue",
                "Epiglottis", "Pylorus", "Bile Duct", "Pharynx",
            )),
            ("Respiratory Organs", (
                "Lung", "Trachea", "Bronchus", "Bronchiole",
                "Alveolus", "Diaphragm", "Larynx", "Nasal Cavity",
                "Sinus", "Pleura", "Intercostal Muscle", "Vocal Cord",
                "Soft Palate", "Hard Palate", "Uvula", "Turbinate",
                "Carina", "Pleural Sac", "Rib Muscle", "Airway Lining",
            )),
            ("Nervous System Organs", (
                "Brain", "Cerebrum", "Cerebellum", "Brainstem",
                "Spinal Cord", "Medulla", "Pons", "Thalamus",
                "Hypothalamus", "Hippocampus", "Amygdala", "Pituitary Gland",
                "Pineal Gland", "Frontal Lobe", "Parietal Lobe", "Temporal Lobe",
                "Occipital Lobe", "Corpus Callosum", "Basal Ganglia", "Nerve Plexus",
            )),
            ("Sensory Organs", (
                "Eye", "Retina", "Cornea", "Iris",
                "Lens", "Optic Nerve", "Ear", "Cochlea",
                "Eardrum", "Ossicle Chain", "Semicircular Canal", "Olfactory Bulb",
                "Taste Bud", "Skin Receptor Layer", "Fingertip Pad", "Vestibule",
                "Auditory Nerve", "Tear Gland", "Eyelid", "Nasal Receptor Patch",
            )),
        )),
        ("Cells", (
            ("Blood Cells", (
                "Red Blood Cell", "Platelet", "Reticulocyte", "Erythroblast",
                "Megakaryocyte", "Proerythroblast", "Normoblast", "Myeloblast",
                "Monoblast", "Lymphoblast", "Hematopoietic Stem Cell", "Myeloid Progenitor",
                "Lymphoid Progenitor", "Band Cell", "Plasma Cell", "Sickle Cell",
                "Spherocyte", "Target Cell", "Burr Cell", "Schistocyte",
            )),
            ("Nerve Cells", (
                "Neuron", "Motor Neuron", "Sensory Neuron", "Interneuron",
                "Pyramidal Neuron", "Purkinje Cell", "Granule Cell", "Astrocyte",
                "Oligodendrocyte", "Microglia Cell", "Schwann Cell", "Ependymal Cell",
                "Bipolar Neuron", "Unipolar Neuron", "Multipolar Neuron", "Mirror Neuron",
                "Basket Cell", "Stellate Cell", "Chandelier Cell", "Golgi Cell",
            )),
            ("Muscle Cells", (
                "Skeletal Muscle Fiber", "Cardiac Muscle Cell", "Smooth Muscle Cell", "Myoblast",
                "Myocyte", "Satellite Cell", "Slow Twitch Fiber", "Fast Twitch Fiber",
                "Cardiomyocyte", "Purkinje Fiber Cell", "Myofibroblast", "Pericyte",
                "Myotube Cell", "Muscle Spindle Cell", "Tendon Junction Cell", "Diaphragm Muscle Cell",
                "Extraocular Muscle Cell", "Sphincter Muscle Cell", "Vascular Muscle Cell", "Intercostal Muscle Cell",
            )),
            ("Immune Cells", (
                "Lymphocyte", "Macrophage", "Neutrophil", "Eosinophil",
                "Basophil", "Monocyte", "Dendritic Cell", "Natural Killer Cell",
                "Helper T Cell", "Cytotoxic T Cell", "Regulatory T Cell", "Memory T Cell",
                "B Lymphocyte", "Memory B Cell", "Mast Cell", "Langerhans Cell",
                "Kupffer Cell", "Microfold Cell", "Gamma Delta T Cell", "Myeloid Suppressor Cell",
            )),
            ("Epithelial Cells", (
                "Squamous Cell", "Cuboidal Cell", "Columnar Cell", "Ciliated Cell",
                "Goblet Cell", "Keratinocyte", "Melanocyte", "Merkel Cell",
                "Basal Cell", "Transitional Cell", "Endothelial Cell", "Mesothelial Cell",
                "Alveolar Cell", "Enterocyte", "Hepatocyte", "Podocyte",
                "Parietal Cell", "Chief Cell", "Tuft Cell", "Club Cell",
            )),
        )),
    ),
)
