package com.acme.shop.account;

public class Customer {
    private Address address;
    private Wallet wallet;
    private LoyaltyPoints loyaltyPoints;

    public Customer(Address address, Wallet wallet, LoyaltyPoints loyaltyPoints) {
        this.address = address;
        this.wallet = wallet;
        this.loyaltyPoints = loyaltyPoints;
    }

    public int customerAge() {
        return 30;
    }

    public Address address() {
        return address;
    }
}
