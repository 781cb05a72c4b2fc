"""Bundled name corpus used by the seeded record generator.

Keeping the names in the package (rather than pulling a faker-style
dependency) makes generation deterministic and self-contained. The Devanagari
lists exist only for on-image decoration; they never reach annotations.
"""
from __future__ import annotations

MALE_FIRST_NAMES = (
    "James", "Robert", "John", "Michael", "David", "William", "Richard", "Joseph",
    "Thomas", "Charles", "Christopher", "Daniel", "Matthew", "Anthony", "Mark",
    "Donald", "Steven", "Paul", "Andrew", "Joshua", "Kenneth", "Kevin", "Brian",
    "George", "Timothy", "Ronald", "Edward", "Jason", "Jeffrey", "Ryan", "Jacob",
    "Gary", "Nicholas", "Eric", "Jonathan", "Stephen", "Larry", "Justin", "Scott",
    "Brandon", "Benjamin", "Samuel", "Gregory", "Alexander", "Frank", "Patrick",
    "Raymond", "Jack", "Dennis", "Jerry", "Tyler", "Aaron", "Jose", "Adam", "Nathan",
    "Henry", "Douglas", "Zachary", "Peter", "Kyle", "Noah", "Ethan", "Jeremy",
    "Walter", "Christian", "Keith", "Roger", "Terry", "Austin", "Sean", "Gerald",
    "Carl", "Harold", "Dylan", "Arthur", "Lawrence", "Jordan", "Jesse", "Bryan",
    "Billy", "Bruce", "Gabriel", "Joe", "Logan", "Alan", "Juan", "Albert", "Willie",
    "Elijah", "Wayne", "Randy", "Vincent", "Mason", "Roy", "Ralph", "Bobby",
    "Russell", "Bradley", "Philip", "Eugene", "Howard", "Fred", "Victor", "Martin",
    "Craig", "Stanley", "Leonard", "Dale", "Nathaniel", "Manuel", "Rodney", "Curtis",
    "Norman", "Marcus", "Glenn", "Travis", "Lee", "Melvin", "Francis", "Johnny",
    "Clarence", "Phillip", "Ernest", "Tony", "Danny", "Caleb", "Luis", "Lucas",
    "Earl", "Jimmy", "Alfred", "Isaac", "Carlos", "Dustin", "Oscar", "Shawn",
    "Clifford", "Hector", "Derek", "Warren", "Ricardo", "Theodore", "Darrell",
    "Miguel", "Don", "Omar", "Cory", "Gordon", "Herbert", "Julian", "Federico",
    "Harvey", "Cameron", "Leroy", "Barry", "Alvin", "Colin", "Wesley", "Dean",
    "Gilbert", "Roberto", "Ramon", "Marvin", "Angel", "Edwin", "Leo", "Duane",
    "Javier", "Felix", "Jim", "Calvin", "Evan", "Trevor", "Grant", "Neil", "Allan",
    "Mitchell", "Lloyd", "Garrett", "Clayton", "Hugh", "Max", "Dwight", "Armando",
    "Owen", "Clinton", "Alberto", "Everett", "Ivan", "Byron", "Salvador", "Andre",
    "Gene", "Chester", "Milton", "Herman", "Wallace", "Franklin", "Perry", "Simon",
    "Clark", "Gavin", "Xavier", "Lonnie", "Luther", "Ted", "Freddie", "Orlando",
    "Levi", "Spencer", "Ray", "Erik", "Dane", "Abel", "Graham", "Stuart", "Damon",
    "Marion", "Harry", "Andres", "Rex", "Wade", "Sergio", "Devin", "Sylvester",
    "Rufus", "Ben", "Solomon", "Nelson", "Guy", "Emmett", "Ross", "Sam", "Conrad",
    "Dominic", "Drew", "Cecil", "Brent", "Rafael", "Ruben", "Wilbur", "Emanuel",
    "Morris", "Rudolph", "Irving", "Otis", "Hans", "Karl", "Blake", "Maurice",
    "Edgar", "Abraham", "Willis", "Sidney", "Amos", "Alfredo", "Chad", "Preston",
    "Elliott", "Hubert", "Ferdinand", "Grady", "Gustavo", "Myron", "Lamar", "Boyd",
)

FEMALE_FIRST_NAMES = (
    "Mary", "Patricia", "Jennifer", "Linda", "Elizabeth", "Barbara", "Susan",
    "Jessica", "Sarah", "Karen", "Lisa", "Nancy", "Betty", "Margaret", "Sandra",
    "Ashley", "Kimberly", "Emily", "Donna", "Michelle", "Carol", "Amanda", "Dorothy",
    "Melissa", "Deborah", "Stephanie", "Rebecca", "Sharon", "Laura", "Cynthia",
    "Kathleen", "Amy", "Angela", "Shirley", "Anna", "Brenda", "Pamela", "Emma",
    "Nicole", "Helen", "Samantha", "Katherine", "Christine", "Debra", "Rachel",
    "Carolyn", "Janet", "Catherine", "Maria", "Heather", "Diane", "Ruth", "Julie",
    "Olivia", "Joyce", "Virginia", "Victoria", "Kelly", "Lauren", "Christina",
    "Joan", "Evelyn", "Judith", "Megan", "Andrea", "Cheryl", "Hannah", "Jacqueline",
    "Martha", "Gloria", "Teresa", "Ann", "Sara", "Madison", "Frances", "Kathryn",
    "Janice", "Jean", "Abigail", "Alice", "Julia", "Judy", "Sophia", "Grace",
    "Denise", "Amber", "Doris", "Marilyn", "Danielle", "Beverly", "Isabella",
    "Theresa", "Diana", "Natalie", "Brittany", "Charlotte", "Marie", "Kayla",
    "Alexis", "Lori", "Tiffany", "Tammy", "Crystal", "Erin", "Rose", "Molly",
    "Wanda", "Peggy", "Audrey", "Ella", "Claire", "Leah", "Vera", "Lucille",
    "Bernice", "Stella", "Edith", "Roberta", "Yvonne", "Bertha", "Colleen",
    "Josephine", "Geraldine", "Eleanor", "Irene", "Mildred", "Vivian", "Florence",
    "Lillian", "Carrie", "Vanessa", "Gail", "Naomi", "Maxine", "Esther", "Iris",
    "Kristin", "Kristen", "Paula", "Monica", "Tanya", "Sherry", "Allison", "Gwen",
    "Sylvia", "Annette", "Marion", "Rosa", "Dolores", "Elaine", "Elena", "Carmen",
    "Priscilla", "Tara", "Kara", "Dana", "Marcia", "Kristina", "Yolanda", "Felicia",
    "Constance", "Roxanne", "Melinda", "Leticia", "Luz", "Faith", "Hope", "April",
    "Melanie", "Meredith", "Heidi", "Lydia", "Veronica", "Daisy", "Velma", "Opal",
    "Cassandra", "Tracey", "Lorraine", "Darlene", "Jenna", "Penny", "Holly", "Dawn",
    "Eva", "Ada", "Mabel", "Flora", "Cora", "Nellie", "Hazel", "Pearl", "Ethel",
    "Lena", "Ida", "Myrtle", "Agnes", "Viola", "Lucy", "Caroline", "Alma", "Jane",
    "Lillie", "Hattie", "Ellen", "Nora", "Minnie", "Maude", "Mattie", "Rosie",
    "Eunice", "Harriet", "Jeanette", "Phyllis", "Ramona", "Candace", "Bonnie",
    "Becky", "Bridget", "Adriana", "Alicia", "Alison", "Bianca", "Camille", "Celia",
    "Claudia", "Corinne", "Deanna", "Delia", "Dianne", "Dina", "Elsa", "Estelle",
    "Eugenia", "Fern", "Freda", "Gabriela", "Gertrude", "Gina", "Greta", "Ingrid",
    "Jackie", "Jasmine", "Joanna", "Johanna", "Juanita", "Kendra", "Krista", "Lara",
    "Laverne", "Leila", "Leona", "Lila", "Lindsay", "Lois", "Lola", "Loretta",
    "Lorena", "Mavis", "Mercedes", "Miriam", "Muriel", "Nadine", "Nina", "Noreen",
)

LAST_NAMES = (
    "Smith", "Johnson", "Williams", "Brown", "Jones", "Garcia", "Miller", "Davis",
    "Rodriguez", "Martinez", "Hernandez", "Lopez", "Gonzalez", "Wilson", "Anderson",
    "Thomas", "Taylor", "Moore", "Jackson", "Martin", "Lee", "Perez", "Thompson",
    "White", "Harris", "Sanchez", "Clark", "Ramirez", "Lewis", "Robinson", "Walker",
    "Young", "Allen", "King", "Wright", "Scott", "Torres", "Nguyen", "Hill",
    "Flores", "Green", "Adams", "Nelson", "Baker", "Hall", "Rivera", "Campbell",
    "Mitchell", "Carter", "Roberts", "Gomez", "Phillips", "Evans", "Turner", "Diaz",
    "Parker", "Cruz", "Edwards", "Collins", "Reyes", "Stewart", "Morris", "Morales",
    "Murphy", "Cook", "Rogers", "Gutierrez", "Ortiz", "Morgan", "Cooper", "Peterson",
    "Bailey", "Reed", "Kelly", "Howard", "Ramos", "Kim", "Cox", "Ward", "Richardson",
    "Watson", "Brooks", "Chavez", "Wood", "James", "Bennett", "Gray", "Mendoza",
    "Ruiz", "Hughes", "Price", "Alvarez", "Castillo", "Sanders", "Patel", "Myers",
    "Long", "Ross", "Foster", "Jimenez", "Powell", "Jenkins", "Perry", "Russell",
    "Sullivan", "Bell", "Coleman", "Butler", "Henderson", "Barnes", "Gonzales",
    "Fisher", "Vasquez", "Simmons", "Romero", "Jordan", "Patterson", "Alexander",
    "Hamilton", "Graham", "Reynolds", "Griffin", "Wallace", "Moreno", "West",
    "Cole", "Hayes", "Bryant", "Herrera", "Gibson", "Ellis", "Tran", "Medina",
    "Aguilar", "Stevens", "Murray", "Ford", "Castro", "Marshall", "Owens",
    "Harrison", "Fernandez", "McDonald", "Woods", "Washington", "Kennedy", "Wells",
    "Vargas", "Henry", "Chen", "Freeman", "Webb", "Tucker", "Guzman", "Burns",
    "Crawford", "Olson", "Simpson", "Porter", "Hunter", "Gordon", "Mendez",
    "Silva", "Shaw", "Snyder", "Mason", "Dixon", "Munoz", "Hunt", "Hicks",
    "Holmes", "Palmer", "Wagner", "Black", "Robertson", "Boyd", "Rose", "Stone",
    "Salazar", "Fox", "Warren", "Mills", "Meyer", "Rice", "Schmidt", "Garza",
    "Daniels", "Ferguson", "Nichols", "Stephens", "Soto", "Weaver", "Ryan",
    "Gardner", "Payne", "Grant", "Dunn", "Kelley", "Spencer", "Hawkins", "Arnold",
    "Pierce", "Vazquez", "Hansen", "Peters", "Santos", "Hart", "Bradley", "Knight",
    "Elliott", "Cunningham", "Duncan", "Armstrong", "Hudson", "Carroll", "Lane",
    "Riley", "Andrews", "Alvarado", "Ray", "Delgado", "Berry", "Perkins", "Hoffman",
    "Johnston", "Matthews", "Pena", "Richards", "Contreras", "Willis", "Carpenter",
    "Lawrence", "Sandoval", "Guerrero", "George", "Chapman", "Rios", "Estrada",
    "Ortega", "Watkins", "Greene", "Nunez", "Wheeler", "Valdez", "Harper", "Burke",
    "Larson", "Santiago", "Maldonado", "Morrison", "Franklin", "Carlson", "Austin",
    "Dominguez", "Carr", "Lawson", "Jacobs", "O'Brien", "Lynch", "Singh", "Vega",
    "Bishop", "Montgomery", "Oliver", "Jensen", "Harvey", "Williamson", "Gilbert",
    "Dean", "Sims", "Espinoza", "Howell", "Li", "Wong", "Reid", "Hanson", "Le",
    "McCoy", "Garrett", "Burton", "Fuller", "Wang", "Weber", "Welch", "Rojas",
    "Lucas", "Marquez", "Fields", "Park", "Yang", "Little", "Banks", "Padilla",
    "Day", "Walsh", "Bowman", "Schultz", "Luna", "Fowler", "Mejia", "Davidson",
    "Acosta", "Brewer", "May", "Holland", "Juarez", "Newman", "Pearson", "Curtis",
    "Cortez", "Douglas", "Schneider", "Joseph", "Barrett", "Navarro", "Figueroa",
    "Keller", "Avila", "Wade", "Molina", "Stanley", "Hopkins", "Campos", "Barnett",
    "Bates", "Chambers", "Caldwell", "Beck", "Lambert", "Miranda", "Byrd", "Craig",
    "Ayala", "Lowe", "Frazier", "Powers", "Neal", "Leonard", "Gregory", "Carrillo",
    "Sutton", "Fleming", "Rhodes", "Shelton", "Schwartz", "Norris", "Jennings",
    "Watts", "Duran", "Walters", "Cohen", "McDaniel", "Moran", "Parks", "Steele",
    "Vaughn", "Becker", "Holt", "Deleon", "Barker", "Terry", "Hale", "Leon",
    "Hail", "Benson", "Haynes", "Horton", "Miles", "Lyons", "Pham", "Graves",
    "Bush", "Thornton", "Wolfe", "Warner", "Cabrera", "McKinney", "Mann", "Zimmerman",
    "Dawson", "Lara", "Fletcher", "Page", "McCarthy", "Love", "Robles", "Cervantes",
    "Solis", "Erickson", "Reeves", "Chang", "Klein", "Salinas", "Fuentes", "Baldwin",
    "Daniel", "Simon", "Velasquez", "Hardy", "Higgins", "Aguirre", "Lin", "Cummings",
    "Chandler", "Sharp", "Barber", "Bowen", "Ochoa", "Dennis", "Robbins", "Liu",
    "Ramsey", "Francis", "Griffith", "Paul", "Blair", "O'Connor", "Cardenas",
    "Pacheco", "Cross", "Calderon", "Quinn", "Moss", "Swanson", "Chan", "Rivas",
    "Khan", "Rodgers", "Serrano", "Fitzgerald", "Rosales", "Stevenson", "Christensen",
    "Manning", "Gill", "Curry", "McLaughlin", "Harmon", "McGee", "Gross", "Doyle",
    "Garner", "Newton", "Burgess", "Reese", "Walton", "Blake", "Trujillo", "Adkins",
    "Brady", "Goodman", "Roman", "Webster", "Goodwin", "Fischer", "Huang", "Potter",
    "Delacruz", "Montoya", "Todd", "Wu", "Hines", "Mullins", "Castaneda", "Malone",
    "Cannon", "Tate", "Mack", "Sherman", "Hubbard", "Hodges", "Zhang", "Guerra",
    "Wolf", "Valencia", "Saunders", "Franco", "Rowe", "Gallagher", "Farmer",
    "Hammond", "Hampton", "Townsend", "Ingram", "Wise", "Gallegos", "Clarke",
    "Barton", "Schroeder", "Maxwell", "Waters", "Logan", "Camacho", "Strickland",
    "Norman", "Person", "Colon", "Parsons", "Frank", "Harrington", "Glover",
    "Osborne", "Buchanan", "Casey", "Floyd", "Patton", "Ibarra", "Ball", "Tyler",
    "Suarez", "Bowers", "Orozco", "Salas", "Cobb", "Gibbs", "Andrade", "Bauer",
    "Conner", "Moody", "Escobar", "McGuire", "Lloyd", "Mueller", "Hartman",
    "French", "Kramer", "McBride", "Pope", "Lindsey", "Velazquez", "Norton",
    "McCormick", "Sparks", "Flynn", "Yates", "Hogan", "Marsh", "Macias", "Villanueva",
    "Zamora", "Pratt", "Stokes", "Owen", "Ballard", "Lang", "Brock", "Villarreal",
    "Charles", "Drake", "Barrera", "Cain", "Patrick", "Pineda", "Burnett", "Mercado",
    "Santana", "Shepherd", "Bautista", "Ali", "Shaffer", "Lamb", "Trevino", "McKenzie",
    "Hess", "Beil", "Olsen", "Cochran", "Morton", "Nash", "Wilkins", "Petersen",
    "Briggs", "Shah", "Roth", "Nicholson", "Holloway", "Lozano", "Rangel", "Flowers",
)

# Devanagari decoration names; drawn on the card art only, never annotated.
HINDI_FIRST_NAMES = (
    "अमित", "राहुल", "सुनील", "विजय", "अजय", "रवि", "संजय", "अनिल",
    "दीपक", "मनोज", "सीता", "गीता", "प्रिया", "नेहा", "पूजा", "अंजलि",
    "कविता", "सुनीता", "मीना", "रेखा",
)

HINDI_LAST_NAMES = (
    "शर्मा", "वर्मा", "गुप्ता", "सिंह", "कुमार", "यादव", "पटेल", "जोशी",
    "मिश्रा", "पांडे", "चौहान", "राव", "नायर", "रेड्डी", "मेहता", "अग्रवाल",
)

HINDI_MALE = "पुरुष"
HINDI_FEMALE = "महिला"

BLOOD_GROUPS = ("A+", "A-", "B+", "B-", "O+", "O-", "AB+", "AB-")

# The 21 large cities used for passport place-of-birth / place-of-issue fields.
CITIES = (
    "Tokyo", "Jakarta", "Delhi", "Guangzhou", "Mumbai", "Manila", "Shanghai",
    "São Paulo", "Seoul", "Mexico City", "Cairo", "New York", "Dhaka", "Beijing",
    "Kolkata", "Bangkok", "Shenzhen", "Moscow", "Buenos Aires", "Lagos", "Bangalore",
)
