#include <iostream>
int main(){ std::cout << "qg2 stub\n"; }
